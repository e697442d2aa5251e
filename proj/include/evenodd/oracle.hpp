#pragma once

// Independent ground truth for differential testing. The classifier here
// casts a ray in a generic direction (through no vertex, parallel to no edge)
// and counts proper crossings, so it needs none of the on-axis handling that
// classify() relies on.
//
// All arithmetic is exact for integer-valued coordinates with magnitude up to
// 2^20, which is what generate_case() produces.

#include <cstdint>
#include <optional>
#include <vector>

#include "evenodd/classify.hpp"
#include "evenodd/geometry.hpp"

namespace evenodd::oracle {

/// Ray direction with integer-valued components.
struct Direction {
  double dx = 1;
  double dy = 0;

  friend bool operator==(const Direction&, const Direction&) = default;
};

/// True iff the line through q along d contains no vertex and d is parallel
/// to no non-degenerate edge.
bool is_generic_direction(const Polygon& poly, const Point& q, const Direction& d);

/// Up to `max_count` distinct generic directions, in the deterministic order
/// the oracle tries them: bisectors of the widest gaps between the sorted
/// bearings of vertices and edges, then the fallback family (1, k).
std::vector<Direction> generic_directions(const Polygon& poly, const Point& q,
                                          std::size_t max_count);

/// Parity of proper crossings along a specific direction. Returns Boundary
/// if q is on the boundary. Throws InternalLogicError if d is not generic.
Classification classify_along(const Polygon& poly, const Point& q, const Direction& d);

/// Ground-truth even-odd classification.
Classification oracle_classify(const Polygon& poly, const Point& q);

struct IntRange {
  std::int64_t min = 0;
  std::int64_t max = 0;
};

/// Largest coordinate magnitude the generator accepts.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 20;

struct GeneratorConfig {
  IntRange vertex_count{3, 16};
  IntRange coordinate{-16, 16};
  double p_on_axis = 0.3;
  double p_duplicate = 0.1;
  double p_on_boundary_query = 0.1;
  std::uint64_t seed = 42;

  /// Throws InputDomainError if a probability is outside [0, 1], a range is
  /// empty, vertex_count.min < 1 or a coordinate exceeds kMaxCoordinate.
  void validate() const;
};

struct GeneratedCase {
  Polygon polygon;
  Point query;
};

/// Deterministic in (cfg, case_index). Coordinates are integers in
/// cfg.coordinate. Each vertex independently duplicates its predecessor with
/// p_duplicate, else lies on the horizontal line through the query with
/// p_on_axis, else lies strictly off it. Finally, with p_on_boundary_query,
/// the query is moved to a lattice point on a random edge.
GeneratedCase generate_case(const GeneratorConfig& cfg, std::uint64_t case_index);

}  // namespace evenodd::oracle
