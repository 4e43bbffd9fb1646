#include "exsuff/perm.hpp"

#include <map>
#include <ostream>
#include <string>

#include "exsuff/error.hpp"

namespace exsuff {

Perm::Perm(std::vector<index_type> mapping) : mapping_(std::move(mapping)) {
  if (mapping_.empty()) throw DomainError("permutation must have at least one element");
  std::vector<bool> seen(mapping_.size(), false);
  for (const index_type v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw DomainError("mapping is not a bijection of {0.." + std::to_string(mapping_.size() - 1) + "}");
    }
    seen[v] = true;
  }
}

Perm::Perm(std::initializer_list<index_type> mapping) : Perm(std::vector<index_type>(mapping)) {}

Perm Perm::identity(std::size_t n) {
  std::vector<index_type> m(n);
  std::iota(m.begin(), m.end(), index_type{0});
  return Perm(std::move(m));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (mapping_[i] != i) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

void check_enumeration_size(std::size_t n) {
  if (n < 1 || n > kEnumerationCap) {
    throw BoundsError("exhaustive enumeration needs 1 <= n <= " + std::to_string(kEnumerationCap) +
                      " (got n = " + std::to_string(n) + "); use Monte Carlo symmetrization instead");
  }
}

std::uint64_t factorial(std::size_t n) {
  if (n > kMultisetCountCap) throw BoundsError("factorial overflows 64 bits for n > 20");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Perm> enumerate_permutations_lex(std::size_t n) {
  std::vector<Perm> out;
  out.reserve(factorial(std::min(n, kEnumerationCap)));
  for_each_permutation_lex(n, [&](std::span<const Perm::index_type> p) {
    out.push_back(Perm({p.begin(), p.end()}));
  });
  return out;
}

std::vector<Perm> enumerate_permutations_minimal_change(std::size_t n) {
  std::vector<Perm> out;
  out.reserve(factorial(std::min(n, kEnumerationCap)));
  for_each_permutation_minimal_change(n, [&](std::span<const Perm::index_type> p) {
    out.push_back(Perm({p.begin(), p.end()}));
  });
  return out;
}

Perm random_permutation(std::size_t n, Rng& rng) {
  if (n < 1) throw DomainError("random_permutation needs n >= 1");
  std::vector<Perm::index_type> m(n);
  std::iota(m.begin(), m.end(), Perm::index_type{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(m[i], m[j]);
  }
  return Perm(std::move(m), Perm::Trusted{});
}

void apply_permutation_into(std::span<const Perm::index_type> p, std::span<const double> x,
                            std::span<double> out) {
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = x[p[i]];
}

Point apply_permutation(const Perm& p, const Point& x) {
  if (p.size() != x.size()) {
    throw DimensionError("permutation of size " + std::to_string(p.size()) + " applied to point of dimension " +
                         std::to_string(x.size()));
  }
  std::vector<double> out(x.size());
  apply_permutation_into(p.mapping(), x.coords(), out);
  return Point(std::move(out));
}

Perm invert(const Perm& p) {
  std::vector<Perm::index_type> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Perm::index_type>(i);
  return Perm(std::move(inv), Perm::Trusted{});
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw DimensionError("cannot compose permutations of different sizes");
  std::vector<Perm::index_type> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return Perm(std::move(out), Perm::Trusted{});
}

std::uint64_t multiset_permutation_count(const Point& x) {
  if (x.size() > kMultisetCountCap) {
    throw BoundsError("multiset_permutation_count supports dimension <= " + std::to_string(kMultisetCountCap));
  }
  std::map<double, std::size_t> multiplicity;
  for (const double v : x.coords()) ++multiplicity[v];
  std::uint64_t count = factorial(x.size());
  for (const auto& [value, m] : multiplicity) count /= factorial(m);
  return count;
}

RankVector rank_vector(const Point& x) {
  std::vector<Perm::index_type> order(x.size());
  std::iota(order.begin(), order.end(), Perm::index_type{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  bool tie = false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (x[order[i - 1]] == x[order[i]]) {
      tie = true;
      break;
    }
  }
  return {Perm(std::move(order)), tie};
}

}  // namespace exsuff
