#pragma once

#include <array>
#include <vector>

#include "pqcbench/registry.hpp"

namespace testing {

struct GoldenFamily {
  const char* family;
  bool is_pqc;
  // L1..L5, empty where the family has no variant.
  std::array<const char*, 5> variants;
};

// Family rows in table order.
inline const std::vector<GoldenFamily>& golden_catalog() {
  static const std::vector<GoldenFamily> rows{
      {"ECDSA", false, {"P-256", "", "P-384", "", "P-521"}},
      {"ML-DSA", true, {"", "ML-DSA-44", "ML-DSA-65", "", "ML-DSA-87"}},
      {"Dilithium", true, {"", "Dilithium2", "Dilithium3", "", "Dilithium5"}},
      {"Falcon", true, {"Falcon-512", "", "", "", "Falcon-1024"}},
      {"Falcon-padded", true, {"Falcon-padded-512", "", "", "", "Falcon-padded-1024"}},
      {"Mayo", true, {"MAYO-2", "", "MAYO-3", "", "MAYO-5"}},
      {"SPHINCS+-SHA-s", true,
       {"SPHINCS+-SHA2-128s-simple", "", "SPHINCS+-SHA2-192s-simple", "", "SPHINCS+-SHA2-256s-simple"}},
      {"SPHINCS+-SHA-f", true,
       {"SPHINCS+-SHA2-128f-simple", "", "SPHINCS+-SHA2-192f-simple", "", "SPHINCS+-SHA2-256f-simple"}},
      {"SPHINCS+-SHAKE-s", true,
       {"SPHINCS+-SHAKE-128s-simple", "", "SPHINCS+-SHAKE-192s-simple", "", "SPHINCS+-SHAKE-256s-simple"}},
      {"SPHINCS+-SHAKE-f", true,
       {"SPHINCS+-SHAKE-128f-simple", "", "SPHINCS+-SHAKE-192f-simple", "", "SPHINCS+-SHAKE-256f-simple"}},
      {"Cross-rsdp-small", true,
       {"Cross-rsdp-128-small", "", "Cross-rsdp-192-small", "", "Cross-rsdp-256-small"}},
      {"Cross-rsdpg-small", true,
       {"Cross-rsdpg-128-small", "", "Cross-rsdpg-192-small", "", "Cross-rsdpg-256-small"}},
      {"Cross-rsdp-balanced", true,
       {"Cross-rsdp-128-balanced", "", "Cross-rsdp-192-balanced", "", "Cross-rsdp-256-balanced"}},
      {"Cross-rsdpg-balanced", true,
       {"Cross-rsdpg-128-balanced", "", "Cross-rsdpg-192-balanced", "", "Cross-rsdpg-256-balanced"}},
      {"Cross-rsdp-fast", true,
       {"Cross-rsdp-128-fast", "", "Cross-rsdp-192-fast", "", "Cross-rsdp-256-fast"}},
      {"Cross-rsdpg-fast", true,
       {"Cross-rsdpg-128-fast", "", "Cross-rsdpg-192-fast", "", "Cross-rsdpg-256-fast"}},
  };
  return rows;
}

/// Expands the table into descriptors: family order, then ascending level.
inline std::vector<pqcb::VariantDescriptor> golden_descriptors() {
  std::vector<pqcb::VariantDescriptor> out;
  for (const auto& row : golden_catalog()) {
    for (int l = 0; l < 5; ++l) {
      if (row.variants[l][0] == '\0') continue;
      pqcb::VariantDescriptor d;
      d.family = row.family;
      d.variant = row.variants[l];
      d.level = static_cast<pqcb::SecurityLevel>(l + 1);
      d.is_pqc = row.is_pqc;
      d.provider_key = row.is_pqc ? "liboqs" : "openssl";
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace testing
