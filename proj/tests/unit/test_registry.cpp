#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "pqcbench/errors.hpp"
#include "pqcbench/providers.hpp"
#include "pqcbench/registry.hpp"

#include "catalog_golden.hpp"
#include "support.hpp"

using namespace pqcb;

namespace {

std::vector<std::string> names(const std::vector<VariantDescriptor>& v) {
  std::vector<std::string> out;
  for (const auto& d : v) out.push_back(d.variant);
  return out;
}

class CountingBackend : public SchemeBackend {
 public:
  KeyPair keypair() const override { return {{1}, {2}}; }
  Signature sign(ByteView, ByteView) const override { return {{3}}; }
  bool verify(ByteView, ByteView, ByteView) const override { return true; }
};

class FixedProvider : public Provider {
 public:
  explicit FixedProvider(std::string key, std::set<std::string> served)
      : key_(std::move(key)), served_(std::move(served)) {}
  std::string_view key() const noexcept override { return key_; }
  bool supports(const VariantDescriptor& d) const override { return served_.count(d.variant) > 0; }
  std::shared_ptr<const SchemeBackend> open(const VariantDescriptor& d) const override {
    if (!supports(d)) throw Error(ErrorCode::UnsupportedVariant, d.variant);
    return std::make_shared<CountingBackend>();
  }

 private:
  std::string key_;
  std::set<std::string> served_;
};

}  // namespace

TEST_SUITE("registry") {
  TEST_CASE("catalog matches the golden variant table") {
    const auto expected = testing::golden_descriptors();
    const auto got = catalog();
    REQUIRE(got.size() == 46);
    REQUIRE(expected.size() == 46);
    for (std::size_t i = 0; i < got.size(); ++i) {
      CAPTURE(i);
      CHECK(got[i].family == expected[i].family);
      CHECK(got[i].variant == expected[i].variant);
      CHECK(got[i].level == expected[i].level);
      CHECK(got[i].is_pqc == expected[i].is_pqc);
      CHECK(got[i].provider_key == expected[i].provider_key);
    }

    std::map<int, int> per_level;
    for (const auto& d : got) ++per_level[to_int(d.level)];
    CHECK(per_level[1] == 14);
    CHECK(per_level[2] == 2);
    CHECK(per_level[3] == 14);
    CHECK(per_level[4] == 0);
    CHECK(per_level[5] == 16);
    CHECK(catalog_families().size() == 16);
  }

  TEST_CASE("catalog is stable across calls and unique by name") {
    const auto a = catalog();
    const auto b = catalog();
    CHECK(a.data() == b.data());
    std::set<std::string> seen;
    for (const auto& d : a) CHECK(seen.insert(d.variant).second);
  }

  TEST_CASE("level filter") {
    CHECK(filter_by_levels(catalog(), {SecurityLevel::L4}).empty());
    CHECK(filter_by_levels(catalog(), {}).empty());
    CHECK(names(filter_by_levels(catalog(), {SecurityLevel::L2})) ==
          std::vector<std::string>{"ML-DSA-44", "Dilithium2"});
    const auto all = filter_by_levels(
        catalog(), {SecurityLevel::L1, SecurityLevel::L2, SecurityLevel::L3, SecurityLevel::L5});
    CHECK(all.size() == 46);

    // Subset in catalog order, and every member at a selected level.
    const LevelSet pick{SecurityLevel::L1, SecurityLevel::L5};
    const auto sub = filter_by_levels(catalog(), pick);
    CHECK(sub.size() == 30);
    std::size_t cursor = 0;
    for (const auto& d : sub) {
      CHECK(pick.count(d.level) == 1);
      while (cursor < catalog().size() && catalog()[cursor].variant != d.variant) ++cursor;
      CHECK(cursor < catalog().size());
    }
  }

  TEST_CASE("family filter") {
    const auto f = filter_by_families(catalog(), {"Falcon", "ECDSA"});
    CHECK(names(f) == std::vector<std::string>{"P-256", "P-384", "P-521", "Falcon-512", "Falcon-1024"});
    CHECK(filter_by_families(catalog(), {"nope"}).empty());
  }

  TEST_CASE("level_from_int") {
    CHECK(level_from_int(1) == SecurityLevel::L1);
    CHECK(level_from_int(4) == SecurityLevel::L4);
    CHECK_FALSE(level_from_int(0).has_value());
    CHECK_FALSE(level_from_int(6).has_value());
  }

  TEST_CASE("instantiate rejects what it cannot serve") {
    ProviderRegistry r;
    r.add(std::make_shared<FixedProvider>("liboqs", std::set<std::string>{"ML-DSA-44"}));

    auto code_of = [&](const VariantDescriptor& d) {
      try {
        (void)r.instantiate(d);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidArgument;
    };

    VariantDescriptor bogus{"ML-DSA", "ML-DSA-1", SecurityLevel::L1, true, "liboqs"};
    CHECK(code_of(bogus) == ErrorCode::UnsupportedVariant);

    VariantDescriptor altered = *find_variant("ML-DSA-44");
    altered.level = SecurityLevel::L1;
    CHECK(code_of(altered) == ErrorCode::UnsupportedVariant);

    CHECK(code_of(*find_variant("P-256")) == ErrorCode::UnsupportedVariant);
    CHECK(code_of(*find_variant("ML-DSA-65")) == ErrorCode::UnsupportedVariant);
    CHECK_NOTHROW((void)r.instantiate(*find_variant("ML-DSA-44")));

    r.set_override("missing");
    CHECK(code_of(*find_variant("ML-DSA-44")) == ErrorCode::UnsupportedVariant);
  }

  TEST_CASE("every catalog entry is served by the bundled providers") {
    const auto r = testing::real_registry();
    for (const auto& d : catalog()) {
      CAPTURE(d.variant);
      CHECK_NOTHROW((void)r.instantiate(d));
    }
  }

  TEST_CASE("environment override routes to the named provider") {
    ::setenv(std::string(kProviderEnvVar).c_str(), "stub", 1);
    const auto r = ProviderRegistry::with_default_providers();
    ::unsetenv(std::string(kProviderEnvVar).c_str());
    REQUIRE(r.override_key() == std::optional<std::string>("stub"));
    // Stub signatures are 32 bytes regardless of the variant.
    const auto inst = r.instantiate(*find_variant("SPHINCS+-SHA2-256s-simple"));
    const auto kp = inst.keypair();
    const Bytes msg{1, 2, 3};
    CHECK(inst.sign(kp.secret_key, msg).bytes.size() == 32);

    const auto plain = ProviderRegistry::with_default_providers();
    CHECK_FALSE(plain.override_key().has_value());
  }

  TEST_CASE("sign/verify roundtrip and single-byte tamper on the smoke subset") {
    const auto r = testing::real_registry();
    const std::array<std::size_t, 4> lengths{0, 1, 32, 1024};
    for (auto name : testing::kSmokeVariants) {
      CAPTURE(name);
      const auto inst = r.instantiate(*find_variant(name));
      std::mt19937_64 rng(std::hash<std::string_view>{}(name));
      const auto kp = inst.keypair();
      const auto other = inst.keypair();
      CHECK(kp.public_key != other.public_key);
      for (int i = 0; i < 20; ++i) {
        const auto msg = testing::random_bytes(rng, lengths[i % lengths.size()]);
        auto sig = inst.sign(kp.secret_key, msg).bytes;
        REQUIRE(inst.verify(kp.public_key, msg, sig));
        CHECK_FALSE(inst.verify(other.public_key, msg, sig));

        auto bad_sig = sig;
        testing::tamper(bad_sig, rng);
        CHECK_FALSE(inst.verify(kp.public_key, msg, bad_sig));
        if (!msg.empty()) {
          auto bad_msg = msg;
          testing::tamper(bad_msg, rng);
          CHECK_FALSE(inst.verify(kp.public_key, bad_msg, sig));
        }
        auto short_sig = sig;
        short_sig.pop_back();
        CHECK_FALSE(inst.verify(kp.public_key, msg, short_sig));
        CHECK_FALSE(inst.verify(kp.public_key, msg, Bytes{}));
      }
    }
  }

  TEST_CASE("every variant rejects truncated, empty and oversized signatures") {
    const auto r = testing::real_registry();
    for (const auto& d : catalog()) {
      CAPTURE(d.variant);
      const auto inst = r.instantiate(d);
      const auto kp = inst.keypair();
      const Bytes msg(32, 0x5a);
      const auto sig = inst.sign(kp.secret_key, msg).bytes;
      REQUIRE(inst.verify(kp.public_key, msg, sig));
      CHECK_FALSE(inst.verify(kp.public_key, msg, Bytes(sig.begin(), sig.end() - 1)));
      CHECK_FALSE(inst.verify(kp.public_key, msg, Bytes(sig.begin(), sig.begin() + 1)));
      CHECK_FALSE(inst.verify(kp.public_key, msg, Bytes{}));
      auto longer = sig;
      longer.push_back(0);
      CHECK_FALSE(inst.verify(kp.public_key, msg, longer));
    }
  }

  TEST_CASE("malformed keys are backend failures") {
    const auto r = testing::real_registry();
    for (auto name : {"P-256", "ML-DSA-44"}) {
      CAPTURE(name);
      const auto inst = r.instantiate(*find_variant(name));
      const Bytes junk{0xde, 0xad};
      const Bytes msg{7};
      try {
        (void)inst.sign(junk, msg);
        FAIL("sign accepted a junk key");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BackendFailure);
      }
      try {
        (void)inst.verify(junk, msg, Bytes(64, 1));
        FAIL("verify accepted a junk key");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BackendFailure);
      }
    }
  }

  TEST_CASE("ECDSA keys of another curve are rejected") {
    const auto r = testing::real_registry();
    const auto p256 = r.instantiate(*find_variant("P-256"));
    const auto p384 = r.instantiate(*find_variant("P-384"));
    const auto kp = p384.keypair();
    const Bytes msg{1, 2, 3};
    CHECK_THROWS_AS((void)p256.sign(kp.secret_key, msg), Error);
  }

  TEST_CASE("stub provider honours its variant restriction") {
    StubOptions o;
    o.variants = std::set<std::string>{"P-256"};
    const auto r = testing::stub_registry(o);
    CHECK_NOTHROW((void)r.instantiate(*find_variant("P-256")));
    CHECK_THROWS_AS((void)r.instantiate(*find_variant("P-384")), Error);
  }
}
