#pragma once

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <string_view>

#include "pqcbench/providers.hpp"
#include "pqcbench/registry.hpp"

namespace testing {

inline constexpr std::array<std::string_view, 6> kSmokeVariants{
    "P-256", "ML-DSA-44", "Falcon-512", "MAYO-2", "SPHINCS+-SHA2-128f-simple", "Cross-rsdp-128-fast"};

inline pqcb::ProviderRegistry real_registry() {
  pqcb::ProviderRegistry r;
  r.add(pqcb::make_openssl_provider());
  r.add(pqcb::make_liboqs_provider());
  return r;
}

inline pqcb::ProviderRegistry stub_registry(pqcb::StubOptions options = {}) {
  pqcb::ProviderRegistry r;
  r.add(pqcb::make_stub_provider(std::move(options)));
  r.set_override("stub");
  return r;
}

inline pqcb::SchemeInstance stub_instance(std::string_view variant, pqcb::StubOptions options = {}) {
  return stub_registry(std::move(options)).instantiate(*pqcb::find_variant(variant));
}

inline pqcb::Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  pqcb::Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng());
  return b;
}

/// Flip one byte at a random position by a non-zero xor mask.
inline void tamper(pqcb::Bytes& b, std::mt19937_64& rng) {
  const std::size_t pos = rng() % b.size();
  b[pos] ^= static_cast<std::uint8_t>(1 + rng() % 255);
}

class TempDir {
 public:
  explicit TempDir(std::string_view tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("pqcb_" + std::string(tag) + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace testing
