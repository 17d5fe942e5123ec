#include <cmath>
#include <random>

#include "doctest.h"
#include "pqcbench/chain_sim.hpp"
#include "pqcbench/errors.hpp"

using namespace pqcb;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no throw");
  return ErrorCode::InvalidArgument;
}

SimulationConfig small(ChainModel m, std::size_t runs = 200) {
  auto c = default_config(m);
  c.runs = runs;
  return c;
}

}  // namespace

TEST_SUITE("chain_sim") {
  TEST_CASE("default configurations") {
    const auto btc = default_config(ChainModel::Bitcoin);
    CHECK(btc.tx_per_block_mean == 1729.0);
    CHECK(btc.block_interval_s == 600.0);
    CHECK(btc.blocks_per_run == 16);
    CHECK(btc.runs == 1000);
    CHECK(btc.seed == 42);
    CHECK(btc.verify_sampling == VerifySampling::NormalPerBlock);
    const auto eth = default_config(2L);
    CHECK(eth.model == ChainModel::Ethereum);
    CHECK(eth.tx_per_block_mean == 131.0);
    CHECK(eth.block_interval_s == 13.0);
    CHECK(default_config(1L) == btc);
  }

  TEST_CASE("unknown models") {
    CHECK(code_of([] { (void)default_config(3L); }) == ErrorCode::UnknownModel);
    CHECK(code_of([] { (void)chain_model_from_int(0); }) == ErrorCode::UnknownModel);
    CHECK(chain_model_from_string("Ethereum") == ChainModel::Ethereum);
    CHECK_FALSE(chain_model_from_string("Solana").has_value());
  }

  TEST_CASE("invalid inputs") {
    auto c = small(ChainModel::Bitcoin);
    c.runs = 0;
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidArgument);
    c = small(ChainModel::Bitcoin);
    c.tx_per_block_mean = 0;
    CHECK(code_of([&] { (void)simulate_batch(c, {1, 0, 1}); }) == ErrorCode::InvalidArgument);
    c = small(ChainModel::Bitcoin);
    CHECK(code_of([&] { (void)simulate_batch(c, {-1, 0, 1}, 4); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { (void)simulate_batch(c, {1, -1, 1}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("zero cost gives zero") {
    const auto r = simulate_batch(small(ChainModel::Bitcoin), {0.0, 0.0, 100});
    CHECK(r.batch.mean_ms == 0.0);
    CHECK(r.batch.std_ms == 0.0);
    CHECK(r.per_run.size() == 200);
  }

  TEST_CASE("each run creates and verifies every block") {
    const auto r = simulate_batch(small(ChainModel::Ethereum, 50), {0.05, 0.002, 100});
    for (const auto& run : r.per_run) CHECK(run.blocks == 16);
  }

  TEST_CASE("same seed same result, independent of worker count") {
    const auto c = small(ChainModel::Bitcoin);
    const StatSummary v{0.0788, 0.0029, 10000};
    const auto a = simulate_batch(c, v, 1);
    const auto b = simulate_batch(c, v, 1);
    const auto d = simulate_batch(c, v, 7);
    CHECK(a == b);
    CHECK(a == d);
    auto c2 = c;
    c2.seed = 43;
    CHECK_FALSE(simulate_batch(c2, v) == a);
  }

  TEST_CASE("run seeds differ per index and per seed") {
    CHECK(derive_run_seed(42, 0) != derive_run_seed(42, 1));
    CHECK(derive_run_seed(42, 0) != derive_run_seed(43, 0));
    CHECK(derive_run_seed(42, 5) == derive_run_seed(42, 5));
  }

  TEST_CASE("mean-only sampling is linear in the verify mean") {
    auto c = small(ChainModel::Bitcoin);
    c.verify_sampling = VerifySampling::MeanOnly;
    const auto a = simulate_batch(c, {0.1, 0.0, 1});
    const auto b = simulate_batch(c, {0.3, 0.0, 1});
    CHECK(b.batch.mean_ms == doctest::Approx(3.0 * a.batch.mean_ms).epsilon(1e-12));
    CHECK(b.batch.std_ms == doctest::Approx(3.0 * a.batch.std_ms).epsilon(1e-12));
    // Per run the mean is exactly transactions x cost / blocks.
    for (const auto& run : a.per_run) {
      CHECK(run.mean_block_verify_ms ==
            doctest::Approx(0.1 * static_cast<double>(run.total_tx) / 16.0).epsilon(1e-12));
    }
  }

  TEST_CASE("calibration: block cost tracks the transaction rate") {
    for (auto m : {ChainModel::Bitcoin, ChainModel::Ethereum}) {
      auto c = default_config(m);
      c.verify_sampling = VerifySampling::MeanOnly;
      const auto r = simulate_batch(c, {1.0, 0.0, 1});
      const double lambda = c.tx_per_block_mean;
      CHECK(r.batch.mean_ms >= 0.98 * lambda);
      CHECK(r.batch.mean_ms <= 1.02 * lambda);
      // Poisson: the run-mean spread is sqrt(lambda / blocks).
      CHECK(r.batch.std_ms == doctest::Approx(std::sqrt(lambda / 16.0)).epsilon(0.15));
    }
  }

  TEST_CASE("per-block sampling centres on the mean") {
    auto c = small(ChainModel::Bitcoin, 400);
    const auto r = simulate_batch(c, {0.0788, 0.0029, 10000});
    CHECK(r.batch.mean_ms == doctest::Approx(1729 * 0.0788).epsilon(0.02));
    // A wide, heavily truncated distribution stays non-negative.
    const auto wide = simulate_batch(c, {0.01, 0.05, 10});
    for (const auto& run : wide.per_run) CHECK(run.mean_block_verify_ms >= 0.0);
  }

  TEST_CASE("ordering of verify means is preserved") {
    const auto c = small(ChainModel::Ethereum);
    double prev = -1.0;
    for (double v : {0.02, 0.03, 0.05, 0.08, 0.4, 0.9}) {
      const auto r = simulate_batch(c, {v, v * 0.05, 1000});
      CHECK(r.batch.mean_ms > prev);
      prev = r.batch.mean_ms;
    }
  }

  TEST_CASE("one run has zero spread") {
    const auto r = simulate_batch(small(ChainModel::Bitcoin, 1), {0.05, 0.001, 10});
    CHECK(r.batch.n == 1);
    CHECK(r.batch.std_ms == 0.0);
  }

  TEST_CASE("event queue: timestamp order, insertion order on ties") {
    EventQueue q;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> bucket(0, 999);
    const std::size_t n = 100000;
    for (std::size_t i = 0; i < n; ++i) {
      q.push(SimEvent{static_cast<double>(bucket(rng)) * 0.5, EventKind::BlockCreated, i, 0});
    }
    CHECK(q.size() == n);
    SimEvent prev = q.pop();
    std::size_t popped = 1;
    while (!q.empty()) {
      const SimEvent e = q.pop();
      REQUIRE(e.timestamp_s >= prev.timestamp_s);
      if (e.timestamp_s == prev.timestamp_s) REQUIRE(e.block_id > prev.block_id);
      prev = e;
      ++popped;
    }
    CHECK(popped == n);
    CHECK(code_of([&] { (void)q.pop(); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { q.push(SimEvent{-1.0}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("key=value echo") {
    const auto text = to_key_values(default_config(ChainModel::Ethereum));
    CHECK(text.find("model=Ethereum\n") != std::string::npos);
    CHECK(text.find("tx_per_block_mean=131\n") != std::string::npos);
    CHECK(text.find("verify_sampling=NormalPerBlock\n") != std::string::npos);
  }
}
