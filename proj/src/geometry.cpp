#include "evenodd/geometry.hpp"

#include <cmath>
#include <string>

namespace evenodd {

namespace {

int sign(double v) { return (v > 0) - (v < 0); }

}  // namespace

Point::Point(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw InputDomainError("point coordinates must be finite");
  }
}

namespace detail {

void throw_translation_overflow() {
  throw InputDomainError("coordinate overflow while translating to the query frame");
}

}  // namespace detail

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw InputDomainError("polygon needs at least one vertex");
  }
}

Polygon translate_to_query_frame(const Polygon& poly, const Point& q) {
  std::vector<Point> moved;
  moved.reserve(poly.size());
  for (const Point& v : poly) moved.push_back(v - q);
  return Polygon(std::move(moved));
}

int axis_crossing(const Point& a, const Point& b, CrossingMode mode) {
  if (a.y() == 0 || b.y() == 0) {
    throw InternalLogicError("axis_crossing called with an endpoint on the x-axis");
  }
  if ((a.y() > 0) == (b.y() > 0)) return 0;
  if (mode == CrossingMode::CompleteAxis) return 1;
  // x* = (a.x*b.y - a.y*b.x) / (b.y - a.y); compare signs instead of dividing.
  const double det = a.x() * b.y() - a.y() * b.x();
  return sign(det) * sign(b.y() - a.y()) > 0 ? 1 : 0;
}

}  // namespace evenodd
