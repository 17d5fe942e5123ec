#include "pqcbench/stats.hpp"

#include <cmath>

#include "pqcbench/errors.hpp"

namespace pqcb {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

StatSummary summarize(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::EmptySamples, "cannot summarize an empty sample list");

  const auto n = samples.size();
  CompensatedSum total;
  for (double x : samples) total.add(x);
  const double mean = total.value() / static_cast<double>(n);

  double stddev = 0.0;
  if (n > 1) {
    CompensatedSum squares;
    CompensatedSum residual;
    for (double x : samples) {
      const double d = x - mean;
      squares.add(d * d);
      residual.add(d);
    }
    // Corrected two-pass: subtract the rounding residual of the mean.
    const double r = residual.value();
    double var = (squares.value() - r * r / static_cast<double>(n)) / static_cast<double>(n - 1);
    stddev = var > 0.0 ? std::sqrt(var) : 0.0;
  }
  return StatSummary{mean, stddev, n};
}

}  // namespace pqcb
