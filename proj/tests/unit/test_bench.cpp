#include <chrono>
#include <fstream>
#include <string>
#include <thread>

#include "doctest.h"
#include "pqcbench/bench.hpp"
#include "pqcbench/errors.hpp"
#include "support.hpp"

using namespace pqcb;
using namespace std::chrono_literals;

namespace {

class RejectingBackend : public SchemeBackend {
 public:
  KeyPair keypair() const override { return {{1}, {2}}; }
  Signature sign(ByteView, ByteView) const override { return {{3}}; }
  bool verify(ByteView, ByteView, ByteView) const override { return false; }
};

std::size_t count_lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_SUITE("bench") {
  TEST_CASE("run plan validation") {
    CHECK_THROWS_AS(RunPlan({0, 0, 32}).validate(), Error);
    CHECK_THROWS_AS(RunPlan({0, 1, 0}).validate(), Error);
    CHECK_NOTHROW(RunPlan({0, 1, 1}).validate());
    const RunPlan defaults;
    CHECK(defaults.warmup == 1000);
    CHECK(defaults.runs == 10000);
  }

  TEST_CASE("warm-up plus measured invocations, measured ones returned") {
    int calls = 0;
    const auto samples = time_operation([&] { ++calls; }, RunPlan{3, 2, 1});
    CHECK(calls == 5);
    CHECK(samples.size() == 2);

    int zero_warmup = 0;
    CHECK(time_operation([&] { ++zero_warmup; }, RunPlan{0, 7, 1}).size() == 7);
    CHECK(zero_warmup == 7);
  }

  TEST_CASE("prepare is untimed and sees the iteration index") {
    std::vector<std::size_t> seen;
    const auto samples = time_prepared_operation(
        [&](std::size_t i) {
          seen.push_back(i);
          std::this_thread::sleep_for(5ms);
        },
        [](std::size_t) {}, RunPlan{2, 3, 1});
    CHECK(seen == std::vector<std::size_t>{0, 1, 2, 3, 4});
    for (double s : samples) CHECK(s < 2.0);
  }

  TEST_CASE("warm-up durations are excluded") {
    int calls = 0;
    const auto samples = time_operation(
        [&] {
          if (calls++ < 4) std::this_thread::sleep_for(20ms);
        },
        RunPlan{4, 10, 1});
    REQUIRE(samples.size() == 10);
    for (double s : samples) CHECK(s < 10.0);
  }

  TEST_CASE("stub delays are measured faithfully") {
    StubOptions o;
    o.sign_delay = 1ms;
    const auto inst = testing::stub_instance("P-256", o);
    const auto kp = inst.keypair();
    const Bytes msg(32, 9);
    const auto s = summarize(time_operation([&] { (void)inst.sign(kp.secret_key, msg); }, RunPlan{5, 100, 32}));
    CHECK(s.mean_ms >= 1.0);
    CHECK(s.mean_ms <= 1.2);
  }

  TEST_CASE("doubling the cost doubles the mean") {
    auto mean_for = [](std::chrono::nanoseconds d) {
      StubOptions o;
      o.verify_delay = d;
      const auto inst = testing::stub_instance("P-256", o);
      const auto kp = inst.keypair();
      const Bytes msg(32, 1);
      const auto sig = inst.sign(kp.secret_key, msg).bytes;
      return summarize(time_operation([&] { (void)inst.verify(kp.public_key, msg, sig); },
                                      RunPlan{5, 200, 32}))
          .mean_ms;
    };
    const double a = mean_for(200us);
    const double b = mean_for(400us);
    CHECK(b > a);
    CHECK(b / a == doctest::Approx(2.0).epsilon(0.2));
  }

  TEST_CASE("timer resolution is positive and repeatable") {
    const double a = measure_timer_resolution(200000);
    const double b = measure_timer_resolution(200000);
    CHECK(a > 0.0);
    CHECK(b > 0.0);
    CHECK(std::max(a, b) / std::min(a, b) <= 10.0);
  }

  TEST_CASE("benchmark_variant records every operation") {
    const auto inst = testing::stub_instance("ML-DSA-44");
    BenchmarkOptions opts;
    opts.keep_raw_samples = true;
    EnvironmentInfo env;
    env.cpu_model = "test-cpu";
    const auto rec = benchmark_variant(inst, RunPlan{3, 25, 16}, env, opts);
    CHECK(rec.descriptor.variant == "ML-DSA-44");
    CHECK(rec.environment.cpu_model == "test-cpu");
    for (auto op : {Operation::Keypair, Operation::Sign, Operation::Verify}) {
      CHECK(rec.stat(op).n == 25);
      CHECK(rec.stat(op).mean_ms >= 0.0);
    }
    REQUIRE(rec.raw_samples.has_value());
    CHECK(rec.raw_samples->verify.size() == 25);

    testing::TempDir dir("raw");
    const auto files = write_raw_samples(rec, dir.path());
    REQUIRE(files.size() == 3);
    CHECK(std::filesystem::exists(dir.path() / "ML-DSA-44_keypair.txt"));
    CHECK(std::filesystem::exists(dir.path() / "ML-DSA-44_verify.txt"));
    CHECK(count_lines(dir.path() / "ML-DSA-44_sign.txt") == 25);

    const auto lean = benchmark_variant(inst, RunPlan{0, 5, 16}, env);
    CHECK_FALSE(lean.raw_samples.has_value());
  }

  TEST_CASE("a small verify pool is cycled") {
    const auto inst = testing::stub_instance("P-256");
    BenchmarkOptions opts;
    opts.verify_pool_bytes = 1;
    CHECK(benchmark_variant(inst, RunPlan{2, 30, 32}, {}, opts).verify_stat.n == 30);
  }

  TEST_CASE("a rejected signature is a correctness violation") {
    const SchemeInstance inst(*find_variant("P-256"), std::make_shared<RejectingBackend>());
    try {
      (void)benchmark_variant(inst, RunPlan{0, 3, 8}, {});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CorrectnessViolation);
    }
  }

  TEST_CASE("real backend, short plan") {
    const auto r = testing::real_registry();
    const auto rec = benchmark_variant(r.instantiate(*find_variant("ML-DSA-44")), RunPlan{5, 50, 32}, {});
    CHECK(rec.verify_stat.n == 50);
    CHECK(rec.verify_stat.mean_ms > 0.0);
  }

  TEST_CASE("environment probe fills what it can") {
    const auto env = probe_environment();
    CHECK_FALSE(env.cpu_model.empty());
    CHECK_FALSE(env.os_descriptor.empty());
    CHECK(env.timer_resolution_ns > 0.0);
  }

  TEST_CASE("operation names") {
    CHECK(to_string(Operation::Keypair) == "keypair");
    CHECK(operation_from_string("verify") == Operation::Verify);
    CHECK_FALSE(operation_from_string("Verify").has_value());
  }
}
