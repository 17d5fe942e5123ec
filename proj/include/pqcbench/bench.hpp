#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqcbench/errors.hpp"
#include "pqcbench/registry.hpp"
#include "pqcbench/stats.hpp"

namespace pqcb {

enum class Operation { Keypair, Sign, Verify };

std::string_view to_string(Operation op) noexcept;
std::optional<Operation> operation_from_string(std::string_view s) noexcept;

/// Warm-up iterations are executed and discarded; only `runs` are recorded.
struct RunPlan {
  std::size_t warmup = 1000;
  std::size_t runs = 10000;
  std::size_t message_len = 32;

  /// Throws InvalidArgument unless runs >= 1 and message_len >= 1.
  void validate() const;
};

struct EnvironmentInfo {
  std::string cpu_model = "unknown";
  std::uint64_t memory_bytes = 0;
  std::string os_descriptor = "unknown";
  double timer_resolution_ns = 0.0;
};

struct RawSamples {
  std::vector<double> keypair;
  std::vector<double> sign;
  std::vector<double> verify;
};

struct BenchmarkRecord {
  VariantDescriptor descriptor;
  EnvironmentInfo environment;
  StatSummary keypair_stat;
  StatSummary sign_stat;
  StatSummary verify_stat;
  std::optional<RawSamples> raw_samples;

  const StatSummary& stat(Operation op) const noexcept;
};

using BenchClock = std::chrono::steady_clock;

inline double to_ms(BenchClock::duration d) noexcept {
  return std::chrono::duration<double, std::milli>(d).count();
}

/// Smallest strictly positive delta between consecutive monotonic clock
/// reads, over `pairs` read pairs. Throws ClockUnavailable when the clock is
/// not steady or never advances.
double measure_timer_resolution(std::size_t pairs = 1'000'000);

/// Runs `prepare` (untimed) then `op` (timed) warmup + runs times and returns
/// the durations of the last `runs` invocations of `op`, in milliseconds.
/// Exceptions from either callable propagate unchanged.
template <typename Prepare, typename Op>
std::vector<double> time_prepared_operation(Prepare&& prepare, Op&& op, const RunPlan& plan) {
  plan.validate();
  std::vector<double> samples;
  samples.reserve(plan.runs);
  for (std::size_t i = 0; i < plan.warmup; ++i) {
    prepare(i);
    op(i);
  }
  for (std::size_t i = 0; i < plan.runs; ++i) {
    const std::size_t iteration = plan.warmup + i;
    prepare(iteration);
    const auto start = BenchClock::now();
    op(iteration);
    const auto stop = BenchClock::now();
    samples.push_back(to_ms(stop - start));
  }
  return samples;
}

/// time_prepared_operation without an untimed preparation step.
template <typename Op>
std::vector<double> time_operation(Op&& op, const RunPlan& plan) {
  return time_prepared_operation([](std::size_t) {}, [&](std::size_t) { op(); }, plan);
}

struct BenchmarkOptions {
  std::uint64_t seed = 42;
  bool keep_raw_samples = false;
  /// Upper bound on memory held by precomputed (message, signature) pairs
  /// for the verify loop. Past it, the stored pairs are cycled.
  std::size_t verify_pool_bytes = std::size_t{64} << 20;
};

/// Times keypair (fresh keys per iteration), sign (one keypair, a fresh
/// random message per iteration) and verify (a precomputed pair per
/// iteration). Throws CorrectnessViolation if any verification fails.
BenchmarkRecord benchmark_variant(const SchemeInstance& instance, const RunPlan& plan,
                                  const EnvironmentInfo& environment,
                                  const BenchmarkOptions& options = {});

/// Best-effort host description; unknown fields stay "unknown"/0.
EnvironmentInfo probe_environment();

/// One file per operation, `<variant>_<operation>.txt`, one duration in ms
/// with 6 fractional digits per line. Returns the files written.
std::vector<std::filesystem::path> write_raw_samples(const BenchmarkRecord& record,
                                                     const std::filesystem::path& directory);

}  // namespace pqcb
