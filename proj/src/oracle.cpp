#include "exsuff/oracle.hpp"

#include <cmath>
#include <sstream>

#include "exsuff/error.hpp"
#include "exsuff/perm.hpp"
#include "exsuff/stats.hpp"

namespace exsuff {

double ConditionalLaw::mass(const PointSet& b) const {
  CompensatedSum total;
  for (const auto& [x, w] : weights) {
    if (b.contains(x)) total.add(w);
  }
  return total.value();
}

double ConditionalLaw::weight(const Point& x) const {
  const auto it = weights.find(x);
  return it == weights.end() ? 0.0 : it->second;
}

FinitePmf order_statistics_pmf(const FinitePmf& p) {
  std::map<Point, CompensatedSum> fibers;
  for (const auto& [x, w] : p.atoms()) fibers[sort_to_cone(x).first.point()].add(w);
  std::map<Point, double> atoms;
  for (const auto& [y, s] : fibers) atoms.emplace(y, s.value());
  return FinitePmf(p.dimension(), std::move(atoms));
}

ConditionalLaw conditional_law_bruteforce(const FinitePmf& p, const SortedPoint& y) {
  if (y.size() != p.dimension()) throw DimensionError("conditioning value has the wrong dimension");
  std::map<Point, double> fiber;
  CompensatedSum fiber_mass;
  for (const auto& [x, w] : p.atoms()) {
    if (sort_to_cone(x).first == y) {
      fiber.emplace(x, w);
      fiber_mass.add(w);
    }
  }
  const double total = fiber_mass.value();
  if (!(total > 0.0)) throw NullConditioningError("order statistics " + to_string(y.point()) + " have probability 0");
  for (auto& [x, w] : fiber) w /= total;
  return {y, std::move(fiber)};
}

ConditionalLaw conditional_law_formula(const SortedPoint& y) {
  check_enumeration_size(y.size());
  // Every rearrangement of y is the image of the same number of permutations
  // (the product of the tie-block factorials), so the n! images spread
  // uniformly over the distinct rearrangements.
  std::map<double, std::size_t> multiplicity;
  for (const double v : y.coords()) ++multiplicity[v];
  double hits = 1.0;
  for (const auto& [value, m] : multiplicity) hits *= static_cast<double>(factorial(m));
  const double weight = hits / static_cast<double>(factorial(y.size()));

  std::map<Point, double> weights;
  for (Point& r : distinct_rearrangements(y.point())) weights.emplace(std::move(r), weight);
  return {y, std::move(weights)};
}

double conditional_expectation_bruteforce(const FinitePmf& p, const Estimand& g, const SortedPoint& y) {
  const ConditionalLaw law = conditional_law_bruteforce(p, y);
  CompensatedSum total;
  for (const auto& [x, w] : law.weights) total.add(w * g(x));
  return total.value();
}

DiscrepancyReport compare_conditional(const FinitePmf& p, double tol) {
  DiscrepancyReport report;
  const FinitePmf y_law = order_statistics_pmf(p);
  bool have_worst = false;
  for (const auto& [y_point, mass] : y_law.atoms()) {
    const SortedPoint y(y_point);
    const ConditionalLaw truth = conditional_law_bruteforce(p, y);
    const ConditionalLaw formula = conditional_law_formula(y);

    auto check = [&](const Point& x) {
      const double a = truth.weight(x);
      const double b = formula.weight(x);
      const double d = std::abs(a - b);
      ++report.cases_checked;
      if (!have_worst || d > report.max_abs_discrepancy) {
        have_worst = true;
        report.max_abs_discrepancy = d;
        std::ostringstream os;
        os.precision(17);
        os << "y=" << y << " x=" << x << " bruteforce=" << a << " formula=" << b;
        report.worst_case = os.str();
      }
    };
    for (const auto& [x, w] : formula.weights) check(x);
    // Atoms the formula does not predict at all.
    for (const auto& [x, w] : truth.weights) {
      if (!formula.weights.contains(x)) check(x);
    }
  }
  report.within_tolerance = report.max_abs_discrepancy <= tol;
  return report;
}

double verify_event_integral_identity(const FinitePmf& p, const Estimand& g, const PointSet& b) {
  if (!b.empty() && b.dimension() != p.dimension()) throw DimensionError("event and pmf have different dimensions");
  const PointSet event = symmetric_closure(intersect_cone(b));
  CompensatedSum lhs;
  CompensatedSum rhs;
  for (const auto& [x, w] : p.atoms()) {
    if (!event.contains(x)) continue;
    lhs.add(w * g(x));
    rhs.add(w * symmetrize_exact(g, sort_to_cone(x).first.point()));
  }
  return std::abs(lhs.value() - rhs.value());
}

}  // namespace exsuff
