#pragma once

#include <cstddef>
#include <span>

namespace pqcb {

/// mean ± std over n timed samples, in milliseconds.
struct StatSummary {
  double mean_ms = 0.0;
  double std_ms = 0.0;
  std::size_t n = 0;

  bool operator==(const StatSummary&) const = default;
};

/// Arithmetic mean and sample standard deviation (divisor n-1, 0 for n = 1).
/// Throws EmptySamples for an empty input.
StatSummary summarize(std::span<const double> samples);

}  // namespace pqcb
