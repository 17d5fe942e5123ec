#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "pqcbench/errors.hpp"
#include "pqcbench/stats.hpp"

using namespace pqcb;

namespace {

// Plain two-pass mean / sample std in long double.
std::pair<long double, long double> oracle(const std::vector<double>& xs) {
  long double sum = 0;
  for (double x : xs) sum += x;
  const long double mean = sum / xs.size();
  if (xs.size() < 2) return {mean, 0};
  long double sq = 0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / (xs.size() - 1))};
}

double rel_err(double got, long double want) {
  if (want == 0) return std::fabs(got);
  return static_cast<double>(std::fabs((got - want) / want));
}

}  // namespace

TEST_SUITE("stats") {
  TEST_CASE("small examples") {
    const std::vector<double> a{1, 2, 3, 4};
    const auto s = summarize(a);
    CHECK(s.mean_ms == doctest::Approx(2.5));
    CHECK(s.std_ms == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));
    CHECK(s.n == 4);

    const std::vector<double> one{0.0788};
    const auto t = summarize(one);
    CHECK(t.mean_ms == 0.0788);
    CHECK(t.std_ms == 0.0);
    CHECK(t.n == 1);

    const std::vector<double> flat(1000, 0.1);
    CHECK(summarize(flat).std_ms < 1e-15);
  }

  TEST_CASE("empty input") {
    try {
      (void)summarize({});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptySamples);
    }
  }

  TEST_CASE("agrees with the long double two-pass oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> len(1, 2000);
    std::lognormal_distribution<double> timing(-2.5, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> xs(len(rng));
      for (auto& x : xs) x = timing(rng);
      const auto s = summarize(xs);
      const auto [m, sd] = oracle(xs);
      CAPTURE(xs.size());
      CHECK(rel_err(s.mean_ms, m) < 1e-12);
      CHECK(rel_err(s.std_ms, sd) < 1e-12);
      CHECK(s.n == xs.size());
    }
  }

  TEST_CASE("large offset with tiny spread") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> noise(0.0, 1e-6);
    std::vector<double> xs(5000);
    for (auto& x : xs) x = 1000.0 + noise(rng);
    const auto s = summarize(xs);
    const auto [m, sd] = oracle(xs);
    CHECK(rel_err(s.mean_ms, m) < 1e-12);
    CHECK(rel_err(s.std_ms, sd) < 1e-6);
  }

  TEST_CASE("shift invariance of the spread and order invariance") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> xs(777);
    for (auto& x : xs) x = u(rng);
    auto shifted = xs;
    for (auto& x : shifted) x += 5.0;
    auto reversed = std::vector<double>(xs.rbegin(), xs.rend());
    const auto a = summarize(xs);
    CHECK(summarize(shifted).std_ms == doctest::Approx(a.std_ms).epsilon(1e-10));
    CHECK(summarize(shifted).mean_ms == doctest::Approx(a.mean_ms + 5.0).epsilon(1e-14));
    CHECK(summarize(reversed).mean_ms == doctest::Approx(a.mean_ms).epsilon(1e-15));
  }
}
