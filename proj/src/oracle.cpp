#include "evenodd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace evenodd::oracle {

namespace {

constexpr double kDirectionScale = 4096.0;

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

int sign(double v) { return (v > 0) - (v < 0); }

double normalized_bearing(double dx, double dy) {
  double angle = std::atan2(dy, dx);
  if (angle < 0) angle += 2 * std::numbers::pi;
  return angle;
}

std::vector<double> excluded_bearings(const Polygon& poly, const Point& q) {
  std::vector<double> bearings;
  auto add_line = [&](double dx, double dy) {
    const double angle = normalized_bearing(dx, dy);
    bearings.push_back(angle);
    bearings.push_back(std::fmod(angle + std::numbers::pi, 2 * std::numbers::pi));
  };
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (a != q) add_line(a.x() - q.x(), a.y() - q.y());
    if (a != b) add_line(b.x() - a.x(), b.y() - a.y());
  }
  std::sort(bearings.begin(), bearings.end());
  bearings.erase(std::unique(bearings.begin(), bearings.end()), bearings.end());
  return bearings;
}

// Uniform integer in [lo, hi] by rejection; std distributions differ between
// standard libraries, which would break cross-platform determinism.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

bool bernoulli(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  return u < p;
}

bool valid_probability(double p) { return p >= 0 && p <= 1; }

}  // namespace

bool is_generic_direction(const Polygon& poly, const Point& q, const Direction& d) {
  if (d.dx == 0 && d.dy == 0) return false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (a != q && cross(d.dx, d.dy, a.x() - q.x(), a.y() - q.y()) == 0) return false;
    if (a != b && cross(d.dx, d.dy, b.x() - a.x(), b.y() - a.y()) == 0) return false;
  }
  return true;
}

std::vector<Direction> generic_directions(const Polygon& poly, const Point& q,
                                          std::size_t max_count) {
  std::vector<Direction> found;
  auto try_add = [&](Direction d) {
    if (found.size() >= max_count) return;
    if (std::find(found.begin(), found.end(), d) != found.end()) return;
    if (is_generic_direction(poly, q, d)) found.push_back(d);
  };

  const std::vector<double> bearings = excluded_bearings(poly, q);
  if (!bearings.empty()) {
    struct Gap {
      double width;
      double middle;
      std::size_t index;
    };
    std::vector<Gap> gaps;
    gaps.reserve(bearings.size());
    for (std::size_t i = 0; i < bearings.size(); ++i) {
      const double lo = bearings[i];
      const double hi =
          i + 1 < bearings.size() ? bearings[i + 1] : bearings.front() + 2 * std::numbers::pi;
      gaps.push_back({hi - lo, lo + (hi - lo) / 2, i});
    }
    std::sort(gaps.begin(), gaps.end(), [](const Gap& l, const Gap& r) {
      return l.width != r.width ? l.width > r.width : l.index < r.index;
    });
    for (const Gap& gap : gaps) {
      try_add({std::round(kDirectionScale * std::cos(gap.middle)),
               std::round(kDirectionScale * std::sin(gap.middle))});
    }
  }

  // Each excluded line direction rules out at most one member of (1, k), so
  // this family always yields a generic direction.
  const auto fallback_count = static_cast<std::int64_t>(bearings.size()) + 1;
  for (std::int64_t k = 0; k <= fallback_count && found.size() < max_count; ++k) {
    try_add({1, static_cast<double>(k)});
  }
  return found;
}

Classification classify_along(const Polygon& poly, const Point& q, const Direction& d) {
  if (is_on_boundary(poly, q)) return Classification::Boundary;
  if (!is_generic_direction(poly, q, d)) {
    throw InternalLogicError("oracle ray direction is not generic");
  }
  std::size_t crossings = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const double ax = a.x() - q.x();
    const double ay = a.y() - q.y();
    const double bx = b.x() - q.x();
    const double by = b.y() - q.y();
    const double side_a = cross(d.dx, d.dy, ax, ay);
    const double side_b = cross(d.dx, d.dy, bx, by);
    if ((side_a > 0) == (side_b > 0)) continue;
    // The line through q crosses the edge; count it if the hit is ahead of q.
    const double ex = bx - ax;
    const double ey = by - ay;
    if (sign(cross(ax, ay, ex, ey)) == sign(cross(d.dx, d.dy, ex, ey))) ++crossings;
  }
  return crossings % 2 == 1 ? Classification::Inside : Classification::Outside;
}

Classification oracle_classify(const Polygon& poly, const Point& q) {
  if (is_on_boundary(poly, q)) return Classification::Boundary;
  const std::vector<Direction> directions = generic_directions(poly, q, 1);
  if (directions.empty()) {
    throw InternalLogicError("oracle found no generic ray direction");
  }
  return classify_along(poly, q, directions.front());
}

void GeneratorConfig::validate() const {
  if (!valid_probability(p_on_axis) || !valid_probability(p_duplicate) ||
      !valid_probability(p_on_boundary_query)) {
    throw InputDomainError("generator probabilities must lie in [0, 1]");
  }
  if (vertex_count.min < 1 || vertex_count.min > vertex_count.max) {
    throw InputDomainError("vertex count range must be non-empty and start at 1 or more");
  }
  if (coordinate.min > coordinate.max || coordinate.min < -kMaxCoordinate ||
      coordinate.max > kMaxCoordinate) {
    throw InputDomainError("coordinate range must be non-empty and within +/-2^20");
  }
}

GeneratedCase generate_case(const GeneratorConfig& cfg, std::uint64_t case_index) {
  cfg.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  std::mt19937_64 rng(seq);

  const auto n = static_cast<std::size_t>(uniform_int(rng, cfg.vertex_count.min, cfg.vertex_count.max));
  const auto [lo, hi] = cfg.coordinate;
  std::int64_t qx = uniform_int(rng, lo, hi);
  std::int64_t qy = uniform_int(rng, lo, hi);

  auto off_axis_y = [&]() -> std::int64_t {
    if (lo == hi) return qy;
    // Draw from the range with qy removed.
    const std::int64_t y = uniform_int(rng, lo, hi - 1);
    return y >= qy ? y + 1 : y;
  };

  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> ys;
  xs.reserve(n);
  ys.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && bernoulli(rng, cfg.p_duplicate)) {
      xs.push_back(xs.back());
      ys.push_back(ys.back());
    } else if (bernoulli(rng, cfg.p_on_axis)) {
      xs.push_back(uniform_int(rng, lo, hi));
      ys.push_back(qy);
    } else {
      xs.push_back(uniform_int(rng, lo, hi));
      ys.push_back(off_axis_y());
    }
  }

  if (bernoulli(rng, cfg.p_on_boundary_query)) {
    const auto edge = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
    const std::size_t next = (edge + 1) % n;
    const std::int64_t dx = xs[next] - xs[edge];
    const std::int64_t dy = ys[next] - ys[edge];
    const std::int64_t g = std::gcd(dx, dy);
    const std::int64_t t = g == 0 ? 0 : uniform_int(rng, 0, g);
    qx = xs[edge] + (g == 0 ? 0 : t * (dx / g));
    qy = ys[edge] + (g == 0 ? 0 : t * (dy / g));
  }

  std::vector<Point> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    vertices.emplace_back(static_cast<double>(xs[i]), static_cast<double>(ys[i]));
  }
  return {Polygon(std::move(vertices)), Point(static_cast<double>(qx), static_cast<double>(qy))};
}

}  // namespace evenodd::oracle
