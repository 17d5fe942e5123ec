#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqcb {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// NIST security category. Level 4 is representable so that level filters can
/// name it, but no catalog entry carries it.
enum class SecurityLevel : std::uint8_t { L1 = 1, L2 = 2, L3 = 3, L4 = 4, L5 = 5 };

constexpr int to_int(SecurityLevel level) noexcept { return static_cast<int>(level); }
std::optional<SecurityLevel> level_from_int(int value) noexcept;

using LevelSet = std::set<SecurityLevel>;

struct VariantDescriptor {
  std::string family;
  std::string variant;
  SecurityLevel level = SecurityLevel::L1;
  bool is_pqc = true;
  std::string provider_key;

  bool operator==(const VariantDescriptor&) const = default;
};

struct KeyPair {
  Bytes public_key;
  Bytes secret_key;
};

struct Signature {
  Bytes bytes;
};

/// One variant as served by a concrete provider. Implementations must be
/// safe to call concurrently from several threads.
class SchemeBackend {
 public:
  virtual ~SchemeBackend() = default;
  virtual KeyPair keypair() const = 0;
  virtual Signature sign(ByteView secret_key, ByteView message) const = 0;
  /// False for a signature that does not verify. Throws BackendFailure only
  /// when the key material itself cannot be used.
  virtual bool verify(ByteView public_key, ByteView message, ByteView signature) const = 0;
};

class SchemeInstance {
 public:
  SchemeInstance(VariantDescriptor descriptor, std::shared_ptr<const SchemeBackend> backend);

  const VariantDescriptor& descriptor() const noexcept { return descriptor_; }

  KeyPair keypair() const;
  Signature sign(ByteView secret_key, ByteView message) const;
  bool verify(ByteView public_key, ByteView message, ByteView signature) const;

 private:
  VariantDescriptor descriptor_;
  std::shared_ptr<const SchemeBackend> backend_;
};

class Provider {
 public:
  virtual ~Provider() = default;
  virtual std::string_view key() const noexcept = 0;
  virtual bool supports(const VariantDescriptor& descriptor) const = 0;
  /// Throws UnsupportedVariant when supports() is false.
  virtual std::shared_ptr<const SchemeBackend> open(const VariantDescriptor& descriptor) const = 0;
};

/// Name of the environment variable that forces every variant onto a single
/// provider key (e.g. "stub" or "liboqs").
inline constexpr std::string_view kProviderEnvVar = "PQCINBLOCK_PROVIDER";

class ProviderRegistry {
 public:
  void add(std::shared_ptr<const Provider> provider);
  const Provider* find(std::string_view key) const;

  /// When set, every descriptor is routed to this provider instead of the one
  /// named by its provider_key.
  void set_override(std::optional<std::string> provider_key);
  const std::optional<std::string>& override_key() const noexcept { return override_; }

  /// Throws UnsupportedVariant for descriptors outside the catalog, for
  /// unknown provider keys and for variants the provider cannot serve.
  SchemeInstance instantiate(const VariantDescriptor& descriptor) const;

  /// openssl + liboqs + stub, with the override taken from kProviderEnvVar.
  static ProviderRegistry with_default_providers();

 private:
  std::map<std::string, std::shared_ptr<const Provider>, std::less<>> providers_;
  std::optional<std::string> override_;
};

/// The full variant catalog: family order, then ascending level.
std::span<const VariantDescriptor> catalog();

std::vector<VariantDescriptor> filter_by_levels(std::span<const VariantDescriptor> entries,
                                                const LevelSet& levels);

std::vector<VariantDescriptor> filter_by_families(std::span<const VariantDescriptor> entries,
                                                  const std::set<std::string>& families);

const VariantDescriptor* find_variant(std::string_view variant);

/// Distinct family names in catalog order.
std::vector<std::string> catalog_families();

}  // namespace pqcb
