#pragma once

#include <cstdint>

namespace exsuff {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Single-pass mean, variance and fourth central moment (Welford/Pebay
/// update). Accumulators merge associatively, so split streams can be
/// combined in a fixed order.
class RunningStats {
 public:
  void push(double x);
  void merge(const RunningStats& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  /// Unbiased (N-1 denominator) sample variance; 0 when count < 2.
  double variance() const;
  double std_error_of_mean() const;
  /// Large-sample standard error of variance(), from the fourth moment.
  double variance_std_error() const;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

}  // namespace exsuff
