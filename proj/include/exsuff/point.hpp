#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace exsuff {

/// A realization of the random vector: n >= 1 ordered (non-NaN) reals.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::partial_ordering operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// A point of the cone of nondecreasing vectors; the value of the order
/// statistics.
class SortedPoint {
 public:
  /// Throws DomainError if coords are not nondecreasing.
  explicit SortedPoint(Point p);
  SortedPoint(std::initializer_list<double> coords);

  const Point& point() const noexcept { return point_; }
  std::size_t size() const noexcept { return point_.size(); }
  double operator[](std::size_t i) const { return point_[i]; }
  std::span<const double> coords() const noexcept { return point_.coords(); }

  friend bool operator==(const SortedPoint&, const SortedPoint&) = default;
  friend std::partial_ordering operator<=>(const SortedPoint&, const SortedPoint&) = default;

 private:
  Point point_;
};

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const SortedPoint& p);

}  // namespace exsuff
