#pragma once

// Brute-force conditional laws of X given its order statistics on finite
// supports, and their comparison against the permutation-average formula.

#include <cstdint>
#include <map>
#include <string>

#include "exsuff/dist.hpp"
#include "exsuff/point.hpp"
#include "exsuff/symcore.hpp"
#include "exsuff/symmetrize.hpp"

namespace exsuff {

inline constexpr double kExactTolerance = 1e-12;

struct ConditionalLaw {
  SortedPoint given;
  std::map<Point, double> weights;

  /// Total weight on b.
  double mass(const PointSet& b) const;
  /// 0 for points without weight.
  double weight(const Point& x) const;
};

struct DiscrepancyReport {
  double max_abs_discrepancy = 0.0;
  std::string worst_case;
  std::uint64_t cases_checked = 0;
  bool within_tolerance = true;
};

/// Law of the order statistics: pushforward of p under sorting.
FinitePmf order_statistics_pmf(const FinitePmf& p);

/// P(X = x | Y = y) = p(x) / P(Y = y) by restriction and renormalization.
/// Throws NullConditioningError when P(Y = y) == 0.
ConditionalLaw conditional_law_bruteforce(const FinitePmf& p, const SortedPoint& y);

/// Uniform law over the n! rearrangements of y; takes no distribution.
ConditionalLaw conditional_law_formula(const SortedPoint& y);

double conditional_expectation_bruteforce(const FinitePmf& p, const Estimand& g, const SortedPoint& y);

/// Compares brute-force and formula conditional laws atom by atom (missing
/// atoms count as weight 0) over every y with positive probability.
DiscrepancyReport compare_conditional(const FinitePmf& p, double tol = kExactTolerance);

/// |sum_x p(x) h(x) g(x) - sum_x p(x) h(x) symmetrize_exact(g, sort(x))| with
/// h the indicator of closure(b intersect cone).
double verify_event_integral_identity(const FinitePmf& p, const Estimand& g, const PointSet& b);

}  // namespace exsuff
