#pragma once

// Finite traces of the symmetric sigma-field: the cone of sorted vectors,
// symmetric closures of point sets and the sorting map.

#include <cstddef>
#include <utility>
#include <vector>

#include "exsuff/perm.hpp"
#include "exsuff/point.hpp"

namespace exsuff {

/// Finite set of equal-dimension points, kept deduplicated in lexicographic
/// order.
class PointSet {
 public:
  PointSet() = default;
  /// Throws DimensionError on mixed dimensions. Duplicates are merged.
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points);

  /// 0 for the empty set.
  std::size_t dimension() const noexcept { return points_.empty() ? 0 : points_.front().size(); }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const Point& p) const;

  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// Sorted rearrangement of x together with the stable sorting permutation.
std::pair<SortedPoint, Perm> sort_to_cone(const Point& x);

/// Order-statistic value only.
SortedPoint order_statistics(const Point& x);

bool is_in_cone(const Point& x);

/// b intersected with the cone of nondecreasing points.
PointSet intersect_cone(const PointSet& b);

/// All distinct rearrangements of one point, in lexicographic order.
std::vector<Point> distinct_rearrangements(const Point& x);

/// Union of all coordinate rearrangements of points of b. Dimension <= 10.
PointSet symmetric_closure(const PointSet& b);

/// Whether b is closed under every adjacent transposition, hence under all
/// permutations. Dimension <= 10.
bool is_symmetric_set(const PointSet& b);

/// For every x in support: sort(x) in b  <=>  x in closure(b intersect cone).
/// Throws DimensionError when both sets are nonempty with different dimensions.
bool event_equivalence_check(const PointSet& support, const PointSet& b);

}  // namespace exsuff
