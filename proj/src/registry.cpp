#include "pqcbench/registry.hpp"

#include <algorithm>
#include <cstdlib>

#include "pqcbench/errors.hpp"
#include "pqcbench/providers.hpp"

namespace pqcb {

namespace {

struct FamilyRow {
  const char* family;
  bool is_pqc;
  const char* provider_key;
  // Indexed by level 1..5; nullptr is a blank cell.
  const char* by_level[5];
};

// clang-format off
constexpr FamilyRow kFamilies[] = {
  {"ECDSA", false, "openssl", {"P-256", nullptr, "P-384", nullptr, "P-521"}},
  {"ML-DSA", true, "liboqs", {nullptr, "ML-DSA-44", "ML-DSA-65", nullptr, "ML-DSA-87"}},
  {"Dilithium", true, "liboqs", {nullptr, "Dilithium2", "Dilithium3", nullptr, "Dilithium5"}},
  {"Falcon", true, "liboqs", {"Falcon-512", nullptr, nullptr, nullptr, "Falcon-1024"}},
  {"Falcon-padded", true, "liboqs", {"Falcon-padded-512", nullptr, nullptr, nullptr, "Falcon-padded-1024"}},
  {"Mayo", true, "liboqs", {"MAYO-2", nullptr, "MAYO-3", nullptr, "MAYO-5"}},
  {"SPHINCS+-SHA-s", true, "liboqs",
   {"SPHINCS+-SHA2-128s-simple", nullptr, "SPHINCS+-SHA2-192s-simple", nullptr, "SPHINCS+-SHA2-256s-simple"}},
  {"SPHINCS+-SHA-f", true, "liboqs",
   {"SPHINCS+-SHA2-128f-simple", nullptr, "SPHINCS+-SHA2-192f-simple", nullptr, "SPHINCS+-SHA2-256f-simple"}},
  {"SPHINCS+-SHAKE-s", true, "liboqs",
   {"SPHINCS+-SHAKE-128s-simple", nullptr, "SPHINCS+-SHAKE-192s-simple", nullptr, "SPHINCS+-SHAKE-256s-simple"}},
  {"SPHINCS+-SHAKE-f", true, "liboqs",
   {"SPHINCS+-SHAKE-128f-simple", nullptr, "SPHINCS+-SHAKE-192f-simple", nullptr, "SPHINCS+-SHAKE-256f-simple"}},
  {"Cross-rsdp-small", true, "liboqs",
   {"Cross-rsdp-128-small", nullptr, "Cross-rsdp-192-small", nullptr, "Cross-rsdp-256-small"}},
  {"Cross-rsdpg-small", true, "liboqs",
   {"Cross-rsdpg-128-small", nullptr, "Cross-rsdpg-192-small", nullptr, "Cross-rsdpg-256-small"}},
  {"Cross-rsdp-balanced", true, "liboqs",
   {"Cross-rsdp-128-balanced", nullptr, "Cross-rsdp-192-balanced", nullptr, "Cross-rsdp-256-balanced"}},
  {"Cross-rsdpg-balanced", true, "liboqs",
   {"Cross-rsdpg-128-balanced", nullptr, "Cross-rsdpg-192-balanced", nullptr, "Cross-rsdpg-256-balanced"}},
  {"Cross-rsdp-fast", true, "liboqs",
   {"Cross-rsdp-128-fast", nullptr, "Cross-rsdp-192-fast", nullptr, "Cross-rsdp-256-fast"}},
  {"Cross-rsdpg-fast", true, "liboqs",
   {"Cross-rsdpg-128-fast", nullptr, "Cross-rsdpg-192-fast", nullptr, "Cross-rsdpg-256-fast"}},
};
// clang-format on

std::vector<VariantDescriptor> build_catalog() {
  std::vector<VariantDescriptor> out;
  for (const auto& row : kFamilies) {
    for (int level = 1; level <= 5; ++level) {
      const char* name = row.by_level[level - 1];
      if (name == nullptr) continue;
      out.push_back(VariantDescriptor{row.family, name, *level_from_int(level), row.is_pqc,
                                      row.provider_key});
    }
  }
  return out;
}

}  // namespace

std::optional<SecurityLevel> level_from_int(int value) noexcept {
  if (value < 1 || value > 5) return std::nullopt;
  return static_cast<SecurityLevel>(value);
}

std::span<const VariantDescriptor> catalog() {
  static const std::vector<VariantDescriptor> entries = build_catalog();
  return entries;
}

std::vector<VariantDescriptor> filter_by_levels(std::span<const VariantDescriptor> entries,
                                                const LevelSet& levels) {
  std::vector<VariantDescriptor> out;
  for (const auto& d : entries) {
    if (levels.contains(d.level)) out.push_back(d);
  }
  return out;
}

std::vector<VariantDescriptor> filter_by_families(std::span<const VariantDescriptor> entries,
                                                  const std::set<std::string>& families) {
  std::vector<VariantDescriptor> out;
  for (const auto& d : entries) {
    if (families.contains(d.family)) out.push_back(d);
  }
  return out;
}

const VariantDescriptor* find_variant(std::string_view variant) {
  const auto entries = catalog();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const VariantDescriptor& d) { return d.variant == variant; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<std::string> catalog_families() {
  std::vector<std::string> out;
  for (const auto& row : kFamilies) out.emplace_back(row.family);
  return out;
}

SchemeInstance::SchemeInstance(VariantDescriptor descriptor,
                               std::shared_ptr<const SchemeBackend> backend)
    : descriptor_(std::move(descriptor)), backend_(std::move(backend)) {
  if (!backend_) throw Error(ErrorCode::InvalidArgument, "scheme instance without backend");
}

KeyPair SchemeInstance::keypair() const { return backend_->keypair(); }

Signature SchemeInstance::sign(ByteView secret_key, ByteView message) const {
  return backend_->sign(secret_key, message);
}

bool SchemeInstance::verify(ByteView public_key, ByteView message, ByteView signature) const {
  return backend_->verify(public_key, message, signature);
}

void ProviderRegistry::add(std::shared_ptr<const Provider> provider) {
  if (!provider) throw Error(ErrorCode::InvalidArgument, "null provider");
  std::string key(provider->key());
  providers_[key] = std::move(provider);
}

const Provider* ProviderRegistry::find(std::string_view key) const {
  auto it = providers_.find(key);
  return it == providers_.end() ? nullptr : it->second.get();
}

void ProviderRegistry::set_override(std::optional<std::string> provider_key) {
  override_ = std::move(provider_key);
}

SchemeInstance ProviderRegistry::instantiate(const VariantDescriptor& descriptor) const {
  const VariantDescriptor* known = find_variant(descriptor.variant);
  if (known == nullptr || *known != descriptor) {
    throw Error(ErrorCode::UnsupportedVariant,
                "variant '" + descriptor.variant + "' is not a catalog entry");
  }
  const std::string& key = override_ ? *override_ : descriptor.provider_key;
  const Provider* provider = find(key);
  if (provider == nullptr) {
    throw Error(ErrorCode::UnsupportedVariant,
                "no provider registered under '" + key + "' for " + descriptor.variant);
  }
  if (!provider->supports(descriptor)) {
    throw Error(ErrorCode::UnsupportedVariant,
                "provider '" + key + "' does not implement " + descriptor.variant);
  }
  return SchemeInstance(descriptor, provider->open(descriptor));
}

ProviderRegistry ProviderRegistry::with_default_providers() {
  ProviderRegistry registry;
  registry.add(make_openssl_provider());
  registry.add(make_liboqs_provider());
  registry.add(make_stub_provider());
  if (const char* env = std::getenv(std::string(kProviderEnvVar).c_str());
      env != nullptr && *env != '\0') {
    registry.set_override(std::string(env));
  }
  return registry;
}

}  // namespace pqcb
