#include "exsuff/dist.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "exsuff/error.hpp"
#include "exsuff/perm.hpp"
#include "exsuff/stats.hpp"

namespace exsuff {

FinitePmf::FinitePmf(std::size_t dimension, std::map<Point, double> atoms) : dimension_(dimension) {
  if (dimension_ < 1) throw DimensionError("pmf dimension must be positive");
  CompensatedSum mass;
  for (auto& [x, p] : atoms) {
    if (x.size() != dimension_) {
      throw DimensionError("atom " + to_string(x) + " does not have dimension " + std::to_string(dimension_));
    }
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("atom " + to_string(x) + " has probability outside [0,1]");
    mass.add(p);
  }
  if (std::abs(mass.value() - 1.0) > kMassTolerance) {
    std::ostringstream os;
    os << std::setprecision(17) << "probabilities sum to " << mass.value() << ", not 1";
    throw DomainError(os.str());
  }
  std::erase_if(atoms, [](const auto& kv) { return kv.second == 0.0; });
  atoms_ = std::move(atoms);
}

double FinitePmf::probability(const Point& x) const {
  const auto it = atoms_.find(x);
  return it == atoms_.end() ? 0.0 : it->second;
}

PointSet FinitePmf::support() const {
  std::vector<Point> pts;
  pts.reserve(atoms_.size());
  for (const auto& [x, p] : atoms_) pts.push_back(x);
  return PointSet(std::move(pts));
}

namespace {

void validate_marginal(const Marginal& marginal) {
  if (marginal.empty()) throw DomainError("marginal has no support");
  CompensatedSum mass;
  std::set<double> values;
  for (const auto& [v, p] : marginal) {
    if (std::isnan(v)) throw DomainError("marginal value is NaN");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("marginal probability outside [0,1]");
    if (!values.insert(v).second) throw DomainError("marginal lists a value twice");
    mass.add(p);
  }
  if (std::abs(mass.value() - 1.0) > kMassTolerance) throw DomainError("marginal probabilities do not sum to 1");
}

void check_support_cap(double size, const char* what) {
  if (size > static_cast<double>(kSupportCap)) {
    throw BoundsError(std::string(what) + " support would exceed " + std::to_string(kSupportCap) + " atoms");
  }
}

// Adds weight * prod_i marginal(x_i) to every atom of the n-fold product.
void accumulate_product(const Marginal& marginal, std::size_t n, double weight, std::map<Point, double>& atoms) {
  const std::size_t k = marginal.size();
  std::vector<std::size_t> digits(n, 0);
  std::vector<double> coords(n);
  for (;;) {
    double p = weight;
    for (std::size_t i = 0; i < n; ++i) {
      coords[i] = marginal[digits[i]].first;
      p *= marginal[digits[i]].second;
    }
    atoms[Point(coords)] += p;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < k) break;
      digits[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

FinitePmf make_iid_pmf(const Marginal& marginal, std::size_t n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  validate_marginal(marginal);
  check_support_cap(std::pow(static_cast<double>(marginal.size()), static_cast<double>(n)), "iid product");
  std::map<Point, double> atoms;
  accumulate_product(marginal, n, 1.0, atoms);
  return FinitePmf(n, std::move(atoms));
}

FinitePmf make_mixture_pmf(const std::vector<std::pair<double, Marginal>>& components, std::size_t n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  if (components.empty()) throw DomainError("mixture has no components");
  CompensatedSum total_weight;
  for (const auto& [w, marginal] : components) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mixture weight outside [0,1]");
    validate_marginal(marginal);
    check_support_cap(std::pow(static_cast<double>(marginal.size()), static_cast<double>(n)), "mixture component");
    total_weight.add(w);
  }
  if (std::abs(total_weight.value() - 1.0) > kMassTolerance) throw DomainError("mixture weights do not sum to 1");
  std::map<Point, double> atoms;
  for (const auto& [w, marginal] : components) accumulate_product(marginal, n, w, atoms);
  check_support_cap(static_cast<double>(atoms.size()), "mixture");
  return FinitePmf(n, std::move(atoms));
}

FinitePmf make_urn_pmf(const std::vector<double>& values, std::size_t n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  const std::size_t k = values.size();
  if (n > k) {
    throw DomainError("cannot draw " + std::to_string(n) + " balls from an urn of " + std::to_string(k));
  }
  double sequences = 1.0;
  for (std::size_t i = 0; i < n; ++i) sequences *= static_cast<double>(k - i);
  check_support_cap(sequences, "urn");

  // Every ordered sequence of n distinct balls has probability 1/sequences;
  // count sequences per value tuple first so each atom gets one division.
  std::map<Point, std::uint64_t> counts;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(k, false);
  std::vector<double> coords(n);
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      ++counts[Point(coords)];
      return;
    }
    for (std::size_t b = 0; b < k; ++b) {
      if (used[b]) continue;
      used[b] = true;
      coords[depth] = values[b];
      self(self, depth + 1);
      used[b] = false;
    }
  };
  recurse(recurse, 0);

  std::map<Point, double> atoms;
  for (const auto& [x, c] : counts) atoms.emplace(x, static_cast<double>(c) / sequences);
  return FinitePmf(n, std::move(atoms));
}

FinitePmf symmetrize_pmf(const FinitePmf& p) {
  const std::size_t n = p.dimension();
  check_enumeration_size(n);
  double total_support = 0.0;
  for (const auto& [x, w] : p.atoms()) total_support += static_cast<double>(multiset_permutation_count(x));
  check_support_cap(total_support, "orbit-averaged");

  // Each distinct rearrangement r of an atom a is hit by n!/count(a)
  // permutations, so it receives p(a) / count(a).
  std::map<Point, double> atoms;
  for (const auto& [x, w] : p.atoms()) {
    const auto rearrangements = distinct_rearrangements(x);
    const double share = w / static_cast<double>(rearrangements.size());
    for (const Point& r : rearrangements) atoms[r] += share;
  }
  return FinitePmf(n, std::move(atoms));
}

bool is_exchangeable(const FinitePmf& p, double tol) {
  std::vector<double> buf;
  for (const auto& [x, w] : p.atoms()) {
    buf.assign(x.coords().begin(), x.coords().end());
    for (std::size_t i = 0; i + 1 < buf.size(); ++i) {
      std::swap(buf[i], buf[i + 1]);
      const double swapped = p.probability(Point(buf));
      std::swap(buf[i], buf[i + 1]);
      if (std::abs(swapped - w) > tol) return false;
    }
  }
  return true;
}

FinitePmf negative_control_pmf() {
  return FinitePmf(2, {{Point{0.0, 1.0}, 0.6}, {Point{1.0, 0.0}, 0.4}});
}

namespace {

bool blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

FinitePmf read_pmf(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(strip_comment(line));
    std::string keyword;
    std::string trailing;
    if (!(ls >> keyword >> dim) || keyword != "dim" || dim < 1 || (ls >> trailing)) {
      throw ParseError(line_no, "expected header 'dim n' with n >= 1");
    }
    break;
  }
  if (dim == 0) throw ParseError("missing 'dim n' header");

  std::map<Point, double> atoms;
  CompensatedSum mass;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(strip_comment(line));
    std::vector<double> fields;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "not a number: '" + token + "'");
      }
      if (used != token.size()) throw ParseError(line_no, "not a number: '" + token + "'");
      fields.push_back(v);
    }
    if (fields.size() != dim + 1) {
      throw ParseError(line_no, "expected " + std::to_string(dim) + " coordinates and a probability, got " +
                                    std::to_string(fields.size()) + " fields");
    }
    const double p = fields.back();
    if (!(p >= 0.0 && p <= 1.0)) throw ParseError(line_no, "probability outside [0,1]");
    fields.pop_back();
    Point x = [&] {
      try {
        return Point(std::move(fields));
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    }();
    if (!atoms.emplace(std::move(x), p).second) throw ParseError(line_no, "duplicate atom");
    mass.add(p);
  }
  if (atoms.empty()) throw ParseError("pmf has no atoms");
  if (std::abs(mass.value() - 1.0) > kLoadMassTolerance) {
    std::ostringstream os;
    os << std::setprecision(17) << "probabilities sum to " << mass.value() << "; must be 1 within 1e-9";
    throw ParseError(os.str());
  }
  const double total = mass.value();
  for (auto& [x, p] : atoms) p /= total;
  return FinitePmf(dim, std::move(atoms));
}

FinitePmf load_pmf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pmf file '" + path + "'");
  try {
    return read_pmf(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_pmf(std::ostream& out, const FinitePmf& p) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << "dim " << p.dimension() << '\n';
  for (const auto& [x, w] : p.atoms()) {
    for (const double v : x.coords()) out << v << ' ';
    out << w << '\n';
  }
  out.precision(old_precision);
}

ScalarSampler uniform01_marginal() {
  return [](Rng& rng) { return rng.uniform01(); };
}

ScalarSampler standard_normal_marginal() {
  return [](Rng& rng) { return rng.standard_normal(); };
}

ScalarSampler exponential_marginal(double scale) {
  if (!(scale > 0.0)) throw DomainError("exponential scale must be positive");
  return [scale](Rng& rng) { return -scale * std::log1p(-rng.uniform01()); };
}

Sampler sampler_iid(std::string name, ScalarSampler marginal, std::size_t n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  return {std::move(name), n, [marginal = std::move(marginal), n](Rng& rng) {
            std::vector<double> c(n);
            for (double& v : c) v = marginal(rng);
            return Point(std::move(c));
          }};
}

Sampler sampler_equicorrelated_gaussian(std::size_t n, double rho) {
  if (n < 1) throw DimensionError("dimension must be positive");
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("equicorrelation rho must lie in [0,1]");
  const double common = std::sqrt(rho);
  const double own = std::sqrt(1.0 - rho);
  return {"equicorr", n, [n, common, own](Rng& rng) {
            const double z0 = rng.standard_normal();
            std::vector<double> c(n);
            for (double& v : c) v = common * z0 + own * rng.standard_normal();
            return Point(std::move(c));
          }};
}

Sampler sampler_urn(std::vector<double> values, std::size_t n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  if (n > values.size()) {
    throw DomainError("cannot draw " + std::to_string(n) + " balls from an urn of " + std::to_string(values.size()));
  }
  return {"urn", n, [values = std::move(values), n](Rng& rng) {
            std::vector<double> urn = values;
            // Forward partial shuffle: positions 0..n-1 are uniform ordered draws.
            for (std::size_t i = 0; i < n; ++i) {
              const auto j = i + static_cast<std::size_t>(rng.below(urn.size() - i));
              std::swap(urn[i], urn[j]);
            }
            urn.resize(n);
            return Point(std::move(urn));
          }};
}

Sampler sampler_dirac_diagonal(double c, std::size_t n) {
  if (n < 1) throw DimensionError("dimension must be positive");
  return {"dirac", n, [c, n](Rng&) { return Point(std::vector<double>(n, c)); }};
}

Sampler sampler_mixture_iid(std::vector<std::pair<double, ScalarSampler>> components, std::size_t n,
                            std::string name) {
  if (n < 1) throw DimensionError("dimension must be positive");
  if (components.empty()) throw DomainError("mixture has no components");
  CompensatedSum total;
  for (const auto& [w, s] : components) {
    if (!(w >= 0.0)) throw DomainError("mixture weight must be nonnegative");
    total.add(w);
  }
  if (std::abs(total.value() - 1.0) > kMassTolerance) throw DomainError("mixture weights do not sum to 1");
  return {std::move(name), n, [components = std::move(components), n](Rng& rng) {
            const double u = rng.uniform01();
            double cumulative = 0.0;
            std::size_t j = components.size() - 1;
            for (std::size_t i = 0; i < components.size(); ++i) {
              cumulative += components[i].first;
              if (u < cumulative) {
                j = i;
                break;
              }
            }
            std::vector<double> c(n);
            for (double& v : c) v = components[j].second(rng);
            return Point(std::move(c));
          }};
}

}  // namespace exsuff
