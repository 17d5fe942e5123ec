#include <openssl/evp.h>

#include <algorithm>
#include <random>

#include "pqcbench/errors.hpp"
#include "pqcbench/providers.hpp"

namespace pqcb {

namespace {

constexpr size_t kKeyLen = 32;

void busy_wait(std::chrono::nanoseconds d) {
  if (d <= std::chrono::nanoseconds::zero()) return;
  const auto deadline = std::chrono::steady_clock::now() + d;
  while (std::chrono::steady_clock::now() < deadline) {
  }
}

Bytes sha256(std::string_view tag, ByteView a, ByteView b = {}) {
  Bytes out(32);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  unsigned int len = 0;
  bool ok = ctx != nullptr && EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, tag.data(), tag.size()) == 1 &&
            EVP_DigestUpdate(ctx, a.data(), a.size()) == 1 &&
            EVP_DigestUpdate(ctx, b.data(), b.size()) == 1 &&
            EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw Error(ErrorCode::BackendFailure, "stub: digest failed");
  return out;
}

class StubBackend final : public SchemeBackend {
 public:
  explicit StubBackend(const StubOptions& options) : options_(options) {}

  KeyPair keypair() const override {
    busy_wait(options_.keypair_delay);
    thread_local std::mt19937_64 rng{std::random_device{}()};
    KeyPair out;
    out.secret_key.resize(kKeyLen);
    std::generate(out.secret_key.begin(), out.secret_key.end(),
                  [] { return static_cast<std::uint8_t>(rng()); });
    out.public_key = sha256("pk", out.secret_key);
    return out;
  }

  Signature sign(ByteView secret_key, ByteView message) const override {
    busy_wait(options_.sign_delay);
    if (secret_key.size() != kKeyLen) {
      throw Error(ErrorCode::BackendFailure, "stub: malformed secret key");
    }
    const Bytes pk = sha256("pk", secret_key);
    return Signature{sha256("sig", pk, message)};
  }

  bool verify(ByteView public_key, ByteView message, ByteView signature) const override {
    busy_wait(options_.verify_delay);
    if (public_key.size() != kKeyLen) {
      throw Error(ErrorCode::BackendFailure, "stub: malformed public key");
    }
    const Bytes expected = sha256("sig", public_key, message);
    return std::equal(expected.begin(), expected.end(), signature.begin(), signature.end());
  }

 private:
  StubOptions options_;
};

class StubProvider final : public Provider {
 public:
  explicit StubProvider(StubOptions options) : options_(std::move(options)) {}

  std::string_view key() const noexcept override { return "stub"; }

  bool supports(const VariantDescriptor& d) const override {
    return !options_.variants || options_.variants->contains(d.variant);
  }

  std::shared_ptr<const SchemeBackend> open(const VariantDescriptor& d) const override {
    if (!supports(d)) {
      throw Error(ErrorCode::UnsupportedVariant, "stub provider does not implement " + d.variant);
    }
    return std::make_shared<StubBackend>(options_);
  }

 private:
  StubOptions options_;
};

}  // namespace

std::shared_ptr<const Provider> make_stub_provider(StubOptions options) {
  return std::make_shared<StubProvider>(std::move(options));
}

}  // namespace pqcb
