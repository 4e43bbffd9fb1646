#include "exsuff/symcore.hpp"

#include <algorithm>
#include <string>

#include "exsuff/error.hpp"

namespace exsuff {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_) {
    if (p.size() != points_.front().size()) throw DimensionError("point set mixes dimensions");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet::PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

bool PointSet::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

std::pair<SortedPoint, Perm> sort_to_cone(const Point& x) {
  RankVector rv = rank_vector(x);
  SortedPoint sorted(apply_permutation(rv.perm, x));
  return {std::move(sorted), std::move(rv.perm)};
}

SortedPoint order_statistics(const Point& x) {
  std::vector<double> c(x.coords().begin(), x.coords().end());
  std::sort(c.begin(), c.end());
  return SortedPoint(Point(std::move(c)));
}

bool is_in_cone(const Point& x) { return std::is_sorted(x.coords().begin(), x.coords().end()); }

PointSet intersect_cone(const PointSet& b) {
  std::vector<Point> kept;
  for (const Point& p : b) {
    if (is_in_cone(p)) kept.push_back(p);
  }
  return PointSet(std::move(kept));
}

std::vector<Point> distinct_rearrangements(const Point& x) {
  std::vector<double> c(x.coords().begin(), x.coords().end());
  std::sort(c.begin(), c.end());
  std::vector<Point> out;
  do {
    out.emplace_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

namespace {

void check_closure_dimension(const PointSet& b) {
  if (b.dimension() > kEnumerationCap) {
    throw BoundsError("symmetric closure supports dimension <= " + std::to_string(kEnumerationCap));
  }
}

}  // namespace

PointSet symmetric_closure(const PointSet& b) {
  check_closure_dimension(b);
  std::vector<Point> all;
  for (const Point& p : b) {
    auto r = distinct_rearrangements(p);
    all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return PointSet(std::move(all));
}

bool is_symmetric_set(const PointSet& b) {
  check_closure_dimension(b);
  std::vector<double> buf;
  for (const Point& p : b) {
    buf.assign(p.coords().begin(), p.coords().end());
    for (std::size_t i = 0; i + 1 < buf.size(); ++i) {
      if (buf[i] == buf[i + 1]) continue;
      std::swap(buf[i], buf[i + 1]);
      const bool present = b.contains(Point(buf));
      std::swap(buf[i], buf[i + 1]);
      if (!present) return false;
    }
  }
  return true;
}

bool event_equivalence_check(const PointSet& support, const PointSet& b) {
  if (!support.empty() && !b.empty() && support.dimension() != b.dimension()) {
    throw DimensionError("support and event have different dimensions");
  }
  const PointSet symmetric_event = symmetric_closure(intersect_cone(b));
  for (const Point& x : support) {
    const bool sorted_in_b = b.contains(sort_to_cone(x).first.point());
    const bool x_in_closure = symmetric_event.contains(x);
    if (sorted_in_b != x_in_closure) return false;
  }
  return true;
}

}  // namespace exsuff
