#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "evenodd/errors.hpp"

namespace evenodd {

/// A finite 2-D coordinate pair. Construction rejects NaN and infinities.
class Point {
 public:
  Point(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  struct Unchecked {};
  Point(double x, double y, Unchecked) : x_(x), y_(y) {}

  double x_;
  double y_;

  friend Point operator-(const Point& a, const Point& b);
};

namespace detail {
[[noreturn]] void throw_translation_overflow();
}  // namespace detail

/// Componentwise difference. Throws InputDomainError on overflow.
inline Point operator-(const Point& a, const Point& b) {
  const double x = a.x_ - b.x_;
  const double y = a.y_ - b.y_;
  // Finite operands can only overflow to infinity; x - x is NaN exactly then.
  if (x - x != 0 || y - y != 0) detail::throw_translation_overflow();
  return Point(x, y, Point::Unchecked{});
}

/// Closed ring of vertices. Edge i joins vertex i and vertex (i + 1) mod n.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const Point> vertices() const { return vertices_; }

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Anything indexable as a vertex ring: a Polygon or a lazily translated view.
template <typename R>
concept VertexRing = requires(const R& ring, std::size_t i) {
  { ring.size() } -> std::convertible_to<std::size_t>;
  { ring[i] } -> std::convertible_to<Point>;
};

/// Read-only view of a polygon translated so that `origin` maps to (0, 0).
/// Vertices are translated on access; nothing is copied.
class QueryFrame {
 public:
  QueryFrame(const Polygon& polygon, const Point& origin)
      : polygon_(&polygon), origin_(origin) {}

  std::size_t size() const { return polygon_->size(); }
  Point operator[](std::size_t i) const { return (*polygon_)[i] - origin_; }

 private:
  const Polygon* polygon_;
  Point origin_;
};

/// Relation of a query-frame point to the x-axis.
enum class AxisSign { OffAxis, OnPositiveAxis, OnNegativeAxis, AtOrigin };

/// Which part of the x-axis a segment is intersected with.
enum class CrossingMode { PositiveAxis, CompleteAxis };

/// Returns `poly` with every vertex moved by -q. The input is not modified.
Polygon translate_to_query_frame(const Polygon& poly, const Point& q);

inline AxisSign axis_sign(const Point& p) {
  if (p.y() != 0) return AxisSign::OffAxis;
  if (p.x() > 0) return AxisSign::OnPositiveAxis;
  if (p.x() < 0) return AxisSign::OnNegativeAxis;
  return AxisSign::AtOrigin;
}

/// True iff p lies on the closed segment [a, b]. Exact: the cross product
/// must be zero and p must lie in the closed bounding box. a == b is allowed
/// and reduces to point equality.
inline bool point_on_segment(const Point& a, const Point& b, const Point& p) {
  const double cross =
      (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
  if (cross != 0) return false;
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

/// Number of times segment [a, b] crosses the selected part of the x-axis
/// (0 or 1). Both endpoints must be off the axis; the segment must not pass
/// through the origin. Throws InternalLogicError if an endpoint has y == 0.
int axis_crossing(const Point& a, const Point& b, CrossingMode mode);

}  // namespace evenodd
