#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "pqcbench/registry.hpp"

namespace pqcb {

/// ECDSA over P-256/P-384/P-521 via OpenSSL, hashing with SHA-256/384/512.
std::shared_ptr<const Provider> make_openssl_provider();

/// Every post-quantum variant of the catalog via the bundled liboqs.
std::shared_ptr<const Provider> make_liboqs_provider();

struct StubOptions {
  std::chrono::nanoseconds keypair_delay{0};
  std::chrono::nanoseconds sign_delay{0};
  std::chrono::nanoseconds verify_delay{0};
  /// Restrict to these variant names; nullopt serves the whole catalog.
  std::optional<std::set<std::string>> variants;
};

/// Hash-based toy scheme with configurable busy-wait costs. Not a real
/// signature scheme: it exists to drive the harness deterministically in tests.
std::shared_ptr<const Provider> make_stub_provider(StubOptions options = {});

}  // namespace pqcb
