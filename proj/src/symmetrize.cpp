#include "exsuff/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "exsuff/error.hpp"
#include "exsuff/perm.hpp"
#include "exsuff/stats.hpp"

namespace exsuff {

Estimand::Estimand(std::string name, std::vector<double> params, Function eval)
    : name_(std::move(name)), params_(std::move(params)), eval_(std::move(eval)) {
  if (!eval_) throw DomainError("estimand '" + name_ + "' has no evaluation function");
}

namespace estimands {

namespace {

std::vector<double> sorted_copy(std::span<const double> x) {
  std::vector<double> c(x.begin(), x.end());
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

Estimand projection(std::size_t k) {
  return Estimand("proj", {static_cast<double>(k)}, [k](std::span<const double> x) {
    if (k >= x.size()) {
      throw DimensionError("projection onto coordinate " + std::to_string(k) + " of a " +
                           std::to_string(x.size()) + "-vector");
    }
    return x[k];
  });
}

Estimand sum() {
  return Estimand("sum", {}, [](std::span<const double> x) {
    CompensatedSum s;
    for (const double v : sorted_copy(x)) s.add(v);
    return s.value();
  });
}

Estimand weighted_sum(std::vector<double> weights) {
  auto w = weights;
  return Estimand("wsum", std::move(weights), [w = std::move(w)](std::span<const double> x) {
    if (x.size() != w.size()) {
      throw DimensionError("weighted sum has " + std::to_string(w.size()) + " weights for a " +
                           std::to_string(x.size()) + "-vector");
    }
    CompensatedSum s;
    for (std::size_t i = 0; i < x.size(); ++i) s.add(w[i] * x[i]);
    return s.value();
  });
}

Estimand product() {
  return Estimand("product", {}, [](std::span<const double> x) {
    double p = 1.0;
    for (const double v : sorted_copy(x)) p *= v;
    return p;
  });
}

Estimand maximum() {
  return Estimand("max", {}, [](std::span<const double> x) { return *std::max_element(x.begin(), x.end()); });
}

Estimand indicator(PointSet b) {
  return Estimand("indicator", {}, [b = std::move(b)](std::span<const double> x) {
    return b.contains(Point(std::vector<double>(x.begin(), x.end()))) ? 1.0 : 0.0;
  });
}

Estimand threshold(double t) {
  return Estimand("threshold", {t}, [t](std::span<const double> x) { return x[0] <= t ? 1.0 : 0.0; });
}

Estimand constant(double c) {
  return Estimand("constant", {c}, [c](std::span<const double>) { return c; });
}

Estimand linear_combination(double a, Estimand g1, double b, Estimand g2) {
  std::string name = "lincomb(" + g1.name() + "," + g2.name() + ")";
  return Estimand(std::move(name), {a, b},
                  [a, b, g1 = std::move(g1), g2 = std::move(g2)](std::span<const double> x) {
                    return a * g1(x) + b * g2(x);
                  });
}

}  // namespace estimands

double symmetrize_exact(const Estimand& g, const Point& y) {
  check_enumeration_size(y.size());
  std::vector<double> buf(y.size());
  CompensatedSum total;
  bool all_equal = true;
  double first = 0.0;
  std::uint64_t count = 0;
  for_each_permutation_lex(y.size(), [&](std::span<const Perm::index_type> p) {
    apply_permutation_into(p, y.coords(), buf);
    const double v = g(std::span<const double>(buf));
    if (count == 0) {
      first = v;
    } else if (v != first) {
      all_equal = false;
    }
    total.add(v);
    ++count;
  });
  if (all_equal) return first;
  return total.value() / static_cast<double>(count);
}

double symmetrize_multiset(const Estimand& g, const Point& y) {
  check_enumeration_size(y.size());
  // Each distinct rearrangement is produced by prod(m_i!) permutations.
  std::map<double, std::size_t> multiplicity;
  for (const double v : y.coords()) ++multiplicity[v];
  double stabilizer = 1.0;
  for (const auto& [value, m] : multiplicity) stabilizer *= static_cast<double>(factorial(m));
  const double weight = stabilizer / static_cast<double>(factorial(y.size()));

  const auto rearrangements = distinct_rearrangements(y);
  if (rearrangements.size() == 1) return g(rearrangements.front());
  CompensatedSum total;
  for (const Point& r : rearrangements) total.add(weight * g(r));
  return total.value();
}

McEstimate symmetrize_mc(const Estimand& g, const Point& y, std::uint64_t m, Rng& rng) {
  if (m < 1) throw DomainError("symmetrize_mc needs at least one draw");
  RunningStats stats;
  std::vector<double> buf(y.size());
  for (std::uint64_t i = 0; i < m; ++i) {
    const Perm p = random_permutation(y.size(), rng);
    apply_permutation_into(p.mapping(), y.coords(), buf);
    stats.push(g(std::span<const double>(buf)));
  }
  return {stats.mean(), stats.std_error_of_mean(), m, false};
}

std::optional<double> RbComparison::variance_ratio() const {
  if (var_raw == 0.0) return std::nullopt;
  return var_rb / var_raw;
}

RbComparison rao_blackwell_compare(const Sampler& sampler, const Estimand& g, std::uint64_t samples, Rng& rng) {
  if (samples < 2) throw DomainError("rao_blackwell_compare needs at least 2 samples");
  check_enumeration_size(sampler.dimension);
  RunningStats raw;
  RunningStats rb;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Point x = sampler(rng);
    raw.push(g(x));
    rb.push(symmetrize_exact(g, sort_to_cone(x).first.point()));
  }
  return {raw.mean(),
          raw.variance(),
          rb.mean(),
          rb.variance(),
          samples,
          raw.std_error_of_mean(),
          rb.std_error_of_mean(),
          raw.variance_std_error(),
          rb.variance_std_error()};
}

}  // namespace exsuff
