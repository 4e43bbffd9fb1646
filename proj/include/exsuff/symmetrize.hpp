#pragma once

// Averaging an estimand over all rearrangements of the order statistics:
// the conditional expectation E[g(X) | Y] for exchangeable X.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exsuff/dist.hpp"
#include "exsuff/point.hpp"
#include "exsuff/random.hpp"
#include "exsuff/symcore.hpp"

namespace exsuff {

inline constexpr std::uint64_t kDefaultMcDraws = 1024;

/// A named real-valued function of an n-vector. Evaluation must be
/// deterministic.
class Estimand {
 public:
  using Function = std::function<double(std::span<const double>)>;

  Estimand(std::string name, std::vector<double> params, Function eval);

  const std::string& name() const noexcept { return name_; }
  const std::vector<double>& params() const noexcept { return params_; }

  double operator()(std::span<const double> x) const { return eval_(x); }
  double operator()(const Point& x) const { return eval_(x.coords()); }

 private:
  std::string name_;
  std::vector<double> params_;
  Function eval_;
};

namespace estimands {

/// g(x) = x_k (zero-based k).
Estimand projection(std::size_t k);
/// Sum of coordinates, accumulated in sorted order so the value does not
/// depend on the coordinate order.
Estimand sum();
Estimand weighted_sum(std::vector<double> weights);
/// Product taken in sorted order (permutation invariant bit for bit).
Estimand product();
Estimand maximum();
Estimand indicator(PointSet b);
/// g(x) = 1{x_0 <= t}.
Estimand threshold(double t);
Estimand constant(double c);
/// a * g1 + b * g2.
Estimand linear_combination(double a, Estimand g1, double b, Estimand g2);

}  // namespace estimands

/// (1/n!) sum over all permutations p of g(apply(p, y)), compensated.
/// When every summand is identical the common value is returned unchanged.
/// Throws BoundsError for dimension > kEnumerationCap.
double symmetrize_exact(const Estimand& g, const Point& y);

/// Same average, grouped over distinct rearrangements with weights
/// (#permutations producing r) / n!.
double symmetrize_multiset(const Estimand& g, const Point& y);

struct McEstimate {
  double value;
  double std_error;
  std::uint64_t draws;
  bool exact;
};

/// Average of g over m uniform random rearrangements of y. m >= 1.
McEstimate symmetrize_mc(const Estimand& g, const Point& y, std::uint64_t m, Rng& rng);

struct RbComparison {
  double mean_raw;
  double var_raw;
  double mean_rb;
  double var_rb;
  std::uint64_t samples;
  double se_mean_raw;
  double se_mean_rb;
  double se_var_raw;
  double se_var_rb;

  /// var_rb / var_raw; empty when var_raw == 0.
  std::optional<double> variance_ratio() const;
};

/// Draws N vectors and compares raw g(X) with its exact symmetrization over
/// the order statistics. N >= 2, sampler dimension <= kEnumerationCap.
RbComparison rao_blackwell_compare(const Sampler& sampler, const Estimand& g, std::uint64_t samples,
                                   Rng& rng);

}  // namespace exsuff
