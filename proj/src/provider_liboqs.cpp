#include <oqs/oqs.h>

#include <cctype>
#include <memory>
#include <mutex>
#include <string_view>

#include "pqcbench/errors.hpp"
#include "pqcbench/providers.hpp"

namespace pqcb {

namespace {

// The catalog capitalises Cross; liboqs spells it in lower case.
std::string oqs_name(const std::string& variant) {
  std::string name = variant;
  if (name.rfind("Cross-", 0) == 0) name[0] = 'c';
  return name;
}

struct SigFree {
  void operator()(OQS_SIG* s) const noexcept { OQS_SIG_free(s); }
};

class OqsBackend final : public SchemeBackend {
 public:
  explicit OqsBackend(std::unique_ptr<OQS_SIG, SigFree> sig) : sig_(std::move(sig)) {
    // Only unpadded Falcon emits variable-length signatures. Several other
    // implementations read length_signature bytes whatever length they are
    // handed, so anything else must match exactly.
    const std::string_view name = sig_->method_name;
    variable_length_ = name.rfind("Falcon-", 0) == 0 && name.rfind("Falcon-padded-", 0) != 0;
  }

  KeyPair keypair() const override {
    KeyPair out;
    out.public_key.resize(sig_->length_public_key);
    out.secret_key.resize(sig_->length_secret_key);
    if (OQS_SIG_keypair(sig_.get(), out.public_key.data(), out.secret_key.data()) != OQS_SUCCESS) {
      throw Error(ErrorCode::BackendFailure, std::string("liboqs keypair failed for ") +
                                                 sig_->method_name);
    }
    return out;
  }

  Signature sign(ByteView secret_key, ByteView message) const override {
    if (secret_key.size() != sig_->length_secret_key) {
      throw Error(ErrorCode::BackendFailure, std::string("malformed secret key for ") +
                                                 sig_->method_name);
    }
    Signature out;
    out.bytes.resize(sig_->length_signature);
    size_t len = 0;
    if (OQS_SIG_sign(sig_.get(), out.bytes.data(), &len, message.data(), message.size(),
                     secret_key.data()) != OQS_SUCCESS) {
      throw Error(ErrorCode::BackendFailure, std::string("liboqs sign failed for ") +
                                                 sig_->method_name);
    }
    out.bytes.resize(len);
    return out;
  }

  bool verify(ByteView public_key, ByteView message, ByteView signature) const override {
    if (public_key.size() != sig_->length_public_key) {
      throw Error(ErrorCode::BackendFailure, std::string("malformed public key for ") +
                                                 sig_->method_name);
    }
    if (signature.size() > sig_->length_signature) return false;
    if (!variable_length_ && signature.size() != sig_->length_signature) return false;
    if (signature.empty()) return false;
    return OQS_SIG_verify(sig_.get(), message.data(), message.size(), signature.data(),
                          signature.size(), public_key.data()) == OQS_SUCCESS;
  }

 private:
  std::unique_ptr<OQS_SIG, SigFree> sig_;
  bool variable_length_ = false;
};

class LiboqsProvider final : public Provider {
 public:
  LiboqsProvider() {
    static std::once_flag once;
    std::call_once(once, [] { OQS_init(); });
  }

  std::string_view key() const noexcept override { return "liboqs"; }

  bool supports(const VariantDescriptor& d) const override {
    if (!d.is_pqc) return false;
    return OQS_SIG_alg_is_enabled(oqs_name(d.variant).c_str()) == 1;
  }

  std::shared_ptr<const SchemeBackend> open(const VariantDescriptor& d) const override {
    std::unique_ptr<OQS_SIG, SigFree> sig(supports(d) ? OQS_SIG_new(oqs_name(d.variant).c_str())
                                                      : nullptr);
    if (!sig) {
      throw Error(ErrorCode::UnsupportedVariant, "liboqs does not implement " + d.variant);
    }
    return std::make_shared<OqsBackend>(std::move(sig));
  }
};

}  // namespace

std::shared_ptr<const Provider> make_liboqs_provider() {
  return std::make_shared<LiboqsProvider>();
}

}  // namespace pqcb
