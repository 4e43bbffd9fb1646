#pragma once

// Permutations of {0, ..., n-1}.
//
// A Perm p acts on a point by gathering: apply(p, x)[i] = x[p[i]]. With this
// convention the rank vector of x is the permutation whose application sorts x.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <vector>

#include "exsuff/point.hpp"
#include "exsuff/random.hpp"

namespace exsuff {

/// Largest n for which all n! permutations may be enumerated.
inline constexpr std::size_t kEnumerationCap = 10;

/// Largest n for which n!/prod(m_i!) is computed in 64-bit arithmetic.
inline constexpr std::size_t kMultisetCountCap = 20;

class Perm {
 public:
  using index_type = std::uint32_t;

  /// Throws DomainError unless mapping is a bijection of {0..n-1}, n >= 1.
  explicit Perm(std::vector<index_type> mapping);
  Perm(std::initializer_list<index_type> mapping);

  static Perm identity(std::size_t n);

  std::size_t size() const noexcept { return mapping_.size(); }
  index_type operator[](std::size_t i) const { return mapping_[i]; }
  std::span<const index_type> mapping() const noexcept { return mapping_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Trusted {};
  Perm(std::vector<index_type> mapping, Trusted) : mapping_(std::move(mapping)) {}
  friend Perm random_permutation(std::size_t, Rng&);
  friend Perm invert(const Perm&);
  friend Perm compose(const Perm&, const Perm&);

  std::vector<index_type> mapping_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

/// Throws BoundsError naming the cap unless 1 <= n <= kEnumerationCap.
void check_enumeration_size(std::size_t n);

std::uint64_t factorial(std::size_t n);

/// Calls visit(std::span<const Perm::index_type>) for each of the n!
/// permutations in lexicographic order. The span is only valid during the call.
template <class Visitor>
void for_each_permutation_lex(std::size_t n, Visitor&& visit) {
  check_enumeration_size(n);
  std::vector<Perm::index_type> current(n);
  std::iota(current.begin(), current.end(), Perm::index_type{0});
  do {
    visit(std::span<const Perm::index_type>(current));
  } while (std::next_permutation(current.begin(), current.end()));
}

/// Steinhaus-Johnson-Trotter with Even's speedup: consecutive permutations
/// differ by one adjacent transposition.
template <class Visitor>
void for_each_permutation_minimal_change(std::size_t n, Visitor&& visit) {
  check_enumeration_size(n);
  std::vector<Perm::index_type> current(n);
  std::iota(current.begin(), current.end(), Perm::index_type{0});
  // direction[i] is the direction of the element currently at position i.
  std::vector<int> direction(n, -1);
  visit(std::span<const Perm::index_type>(current));
  for (;;) {
    // Largest mobile element: its neighbour in its direction is smaller.
    std::size_t mobile = n;
    for (std::size_t i = 0; i < n; ++i) {
      const long long j = static_cast<long long>(i) + direction[i];
      if (j < 0 || j >= static_cast<long long>(n)) continue;
      if (current[static_cast<std::size_t>(j)] < current[i] &&
          (mobile == n || current[i] > current[mobile])) {
        mobile = i;
      }
    }
    if (mobile == n) return;
    const Perm::index_type value = current[mobile];
    const std::size_t target = static_cast<std::size_t>(static_cast<long long>(mobile) + direction[mobile]);
    std::swap(current[mobile], current[target]);
    std::swap(direction[mobile], direction[target]);
    for (std::size_t i = 0; i < n; ++i) {
      if (current[i] > value) direction[i] = -direction[i];
    }
    visit(std::span<const Perm::index_type>(current));
  }
}

std::vector<Perm> enumerate_permutations_lex(std::size_t n);
std::vector<Perm> enumerate_permutations_minimal_change(std::size_t n);

/// Uniform permutation by the backward swap (Fisher-Yates) construction.
/// n >= 1.
Perm random_permutation(std::size_t n, Rng& rng);

/// out[i] = x[p[i]]; sizes must agree (unchecked).
void apply_permutation_into(std::span<const Perm::index_type> p, std::span<const double> x,
                            std::span<double> out);

Point apply_permutation(const Perm& p, const Point& x);
Perm invert(const Perm& p);
/// apply(compose(p, q), x) == apply(p, apply(q, x)).
Perm compose(const Perm& p, const Perm& q);

/// n! / prod(m_i!) over the multiplicities of the distinct coordinate values.
std::uint64_t multiset_permutation_count(const Point& x);

struct RankVector {
  Perm perm;
  bool tie_flag;
};

/// Stable-sort permutation of x (ties keep their original order).
RankVector rank_vector(const Point& x);

}  // namespace exsuff
