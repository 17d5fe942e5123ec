#include <openssl/err.h>
#include <openssl/evp.h>
#include <openssl/x509.h>

#include <cstring>
#include <memory>
#include <mutex>

#include "pqcbench/errors.hpp"
#include "pqcbench/providers.hpp"

namespace pqcb {

namespace {

struct PkeyFree {
  void operator()(EVP_PKEY* p) const noexcept { EVP_PKEY_free(p); }
};
struct MdCtxFree {
  void operator()(EVP_MD_CTX* p) const noexcept { EVP_MD_CTX_free(p); }
};
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxFree>;

[[noreturn]] void fail(const std::string& what) {
  unsigned long err = ERR_get_error();
  std::string detail;
  if (err != 0) {
    char buf[256];
    ERR_error_string_n(err, buf, sizeof buf);
    detail = std::string(": ") + buf;
  }
  ERR_clear_error();
  throw Error(ErrorCode::BackendFailure, "openssl: " + what + detail);
}

// Empty messages still need a valid pointer for the EVP one-shot calls.
const unsigned char* data_or_empty(ByteView v) {
  static const unsigned char kEmpty = 0;
  return v.empty() ? &kEmpty : v.data();
}

/// Remembers the most recently decoded key so repeated sign/verify calls with
/// the same encoded key do not pay for DER parsing inside the timed region.
class KeyCache {
 public:
  template <typename Decode>
  std::shared_ptr<EVP_PKEY> get(ByteView encoded, Decode&& decode) const {
    std::lock_guard lock(mu_);
    if (key_ && encoded.size() == bytes_.size() &&
        std::memcmp(encoded.data(), bytes_.data(), bytes_.size()) == 0) {
      return key_;
    }
    std::shared_ptr<EVP_PKEY> fresh(decode(encoded), PkeyFree{});
    if (fresh) {
      bytes_.assign(encoded.begin(), encoded.end());
      key_ = fresh;
    }
    return fresh;
  }

 private:
  mutable std::mutex mu_;
  mutable Bytes bytes_;
  mutable std::shared_ptr<EVP_PKEY> key_;
};

class EcdsaBackend final : public SchemeBackend {
 public:
  EcdsaBackend(const char* group, const EVP_MD* md) : group_(group), md_(md) {}

  KeyPair keypair() const override {
    std::unique_ptr<EVP_PKEY, PkeyFree> key(EVP_PKEY_Q_keygen(nullptr, nullptr, "EC", group_));
    if (!key) fail("EC key generation failed");
    KeyPair out;
    out.secret_key = encode(key.get(), i2d_PrivateKey);
    out.public_key = encode(key.get(), i2d_PUBKEY);
    return out;
  }

  Signature sign(ByteView secret_key, ByteView message) const override {
    auto key = secret_cache_.get(secret_key, [](ByteView der) {
      const unsigned char* p = der.data();
      return d2i_PrivateKey(EVP_PKEY_EC, nullptr, &p, static_cast<long>(der.size()));
    });
    if (!key) fail("malformed EC private key");
    check_group(key.get());
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, md_, nullptr, key.get()) != 1) {
      fail("DigestSignInit");
    }
    size_t len = 0;
    if (EVP_DigestSign(ctx.get(), nullptr, &len, data_or_empty(message), message.size()) != 1) {
      fail("DigestSign (size query)");
    }
    Signature sig;
    sig.bytes.resize(len);
    if (EVP_DigestSign(ctx.get(), sig.bytes.data(), &len, data_or_empty(message),
                       message.size()) != 1) {
      fail("DigestSign");
    }
    sig.bytes.resize(len);
    return sig;
  }

  bool verify(ByteView public_key, ByteView message, ByteView signature) const override {
    auto key = public_cache_.get(public_key, [](ByteView der) {
      const unsigned char* p = der.data();
      return d2i_PUBKEY(nullptr, &p, static_cast<long>(der.size()));
    });
    if (!key) fail("malformed EC public key");
    check_group(key.get());
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, md_, nullptr, key.get()) != 1) {
      fail("DigestVerifyInit");
    }
    // 0 and negative results (including undecodable DER signatures) are
    // all a rejected signature, not a provider fault.
    int rc = EVP_DigestVerify(ctx.get(), data_or_empty(signature), signature.size(),
                              data_or_empty(message), message.size());
    ERR_clear_error();
    return rc == 1;
  }

 private:
  template <typename I2D>
  static Bytes encode(EVP_PKEY* key, I2D i2d) {
    int len = i2d(key, nullptr);
    if (len <= 0) fail("key encoding");
    Bytes out(static_cast<size_t>(len));
    unsigned char* p = out.data();
    if (i2d(key, &p) != len) fail("key encoding");
    return out;
  }

  void check_group(EVP_PKEY* key) const {
    char name[64] = {0};
    size_t len = 0;
    if (EVP_PKEY_get_group_name(key, name, sizeof name, &len) != 1 ||
        std::strcmp(name, curve_name()) != 0) {
      throw Error(ErrorCode::BackendFailure,
                  std::string("openssl: key is not on curve ") + group_);
    }
  }

  const char* curve_name() const {
    // OpenSSL reports the SEC names for the NIST curves.
    if (std::strcmp(group_, "P-256") == 0) return "prime256v1";
    if (std::strcmp(group_, "P-384") == 0) return "secp384r1";
    return "secp521r1";
  }

  const char* group_;
  const EVP_MD* md_;
  KeyCache secret_cache_;
  KeyCache public_cache_;
};

class OpenSslProvider final : public Provider {
 public:
  std::string_view key() const noexcept override { return "openssl"; }

  bool supports(const VariantDescriptor& d) const override {
    return d.variant == "P-256" || d.variant == "P-384" || d.variant == "P-521";
  }

  std::shared_ptr<const SchemeBackend> open(const VariantDescriptor& d) const override {
    if (d.variant == "P-256") return std::make_shared<EcdsaBackend>("P-256", EVP_sha256());
    if (d.variant == "P-384") return std::make_shared<EcdsaBackend>("P-384", EVP_sha384());
    if (d.variant == "P-521") return std::make_shared<EcdsaBackend>("P-521", EVP_sha512());
    throw Error(ErrorCode::UnsupportedVariant, "openssl provider does not implement " + d.variant);
  }
};

}  // namespace

std::shared_ptr<const Provider> make_openssl_provider() {
  return std::make_shared<OpenSslProvider>();
}

}  // namespace pqcb
