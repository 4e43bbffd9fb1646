#pragma once

// Exchangeable distributions: exact finitely supported pmfs for the oracles
// and seeded samplers for the statistical experiments.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exsuff/point.hpp"
#include "exsuff/random.hpp"
#include "exsuff/symcore.hpp"

namespace exsuff {

inline constexpr double kMassTolerance = 1e-12;
inline constexpr double kLoadMassTolerance = 1e-9;
inline constexpr std::size_t kSupportCap = 100000;

/// (value, probability) pairs of a one-dimensional marginal.
using Marginal = std::vector<std::pair<double, double>>;

/// Finitely supported probability mass function on n-vectors. Zero-mass
/// atoms are dropped on construction.
class FinitePmf {
 public:
  /// Throws DimensionError / DomainError unless all atoms have the given
  /// dimension, probabilities lie in [0, 1] and sum to 1 within kMassTolerance.
  FinitePmf(std::size_t dimension, std::map<Point, double> atoms);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  const std::map<Point, double>& atoms() const noexcept { return atoms_; }
  /// 0 for points outside the support.
  double probability(const Point& x) const;
  PointSet support() const;

  friend bool operator==(const FinitePmf&, const FinitePmf&) = default;

 private:
  std::size_t dimension_;
  std::map<Point, double> atoms_;
};

FinitePmf make_iid_pmf(const Marginal& marginal, std::size_t n);
FinitePmf make_mixture_pmf(const std::vector<std::pair<double, Marginal>>& components, std::size_t n);
/// n ordered draws without replacement from a finite multiset of values.
FinitePmf make_urn_pmf(const std::vector<double>& values, std::size_t n);

/// Orbit average q(x) = (1/n!) sum_pi p(pi x).
FinitePmf symmetrize_pmf(const FinitePmf& p);

/// p(x) == p(x with coordinates i, i+1 swapped) within tol, for all atoms x
/// and all i.
bool is_exchangeable(const FinitePmf& p, double tol);

/// {(0,1): 0.6, (1,0): 0.4}: a non-exchangeable law for negative controls.
FinitePmf negative_control_pmf();

/// Text format: header `dim n`, then one atom per line `v1 ... vn p`.
/// Blank lines and `#` comments are ignored. Mass must be within
/// kLoadMassTolerance of 1 and is renormalized.
FinitePmf read_pmf(std::istream& in);
FinitePmf load_pmf(const std::string& path);
void write_pmf(std::ostream& out, const FinitePmf& p);

using ScalarSampler = std::function<double(Rng&)>;

/// A seeded exchangeable sampler of n-vectors.
struct Sampler {
  std::string name;
  std::size_t dimension;
  std::function<Point(Rng&)> draw;

  Point operator()(Rng& rng) const { return draw(rng); }
};

ScalarSampler uniform01_marginal();
ScalarSampler standard_normal_marginal();
ScalarSampler exponential_marginal(double scale);

Sampler sampler_iid(std::string name, ScalarSampler marginal, std::size_t n);
/// X_i = sqrt(rho) Z_0 + sqrt(1 - rho) Z_i; rho in [0, 1].
Sampler sampler_equicorrelated_gaussian(std::size_t n, double rho);
Sampler sampler_urn(std::vector<double> values, std::size_t n);
Sampler sampler_dirac_diagonal(double c, std::size_t n);
/// Pick component j with probability weight_j, then draw n iid values from it.
Sampler sampler_mixture_iid(std::vector<std::pair<double, ScalarSampler>> components, std::size_t n,
                            std::string name = "mixture");

}  // namespace exsuff
