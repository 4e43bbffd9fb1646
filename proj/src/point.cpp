#include "exsuff/point.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "exsuff/error.hpp"

namespace exsuff {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("point must have at least one coordinate");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (std::isnan(coords_[i])) {
      throw DomainError("coordinate " + std::to_string(i) + " is NaN; coordinates must be ordered values");
    }
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

SortedPoint::SortedPoint(Point p) : point_(std::move(p)) {
  for (std::size_t i = 1; i < point_.size(); ++i) {
    if (point_[i - 1] > point_[i]) throw DomainError("coordinates are not nondecreasing: " + to_string(point_));
  }
}

SortedPoint::SortedPoint(std::initializer_list<double> coords) : SortedPoint(Point(coords)) {}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const SortedPoint& p) { return os << p.point(); }

}  // namespace exsuff
