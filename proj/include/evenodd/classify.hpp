#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "evenodd/geometry.hpp"

namespace evenodd {

enum class Classification { Inside, Outside, Boundary };

std::string_view to_string(Classification c);

/// How one hop of the walk was counted. `Skipped` means the hop jumped over
/// a run of vertices on the negative x-axis and counted nothing.
enum class HopMode { PositiveAxis, CompleteAxis, Skipped };

std::string_view to_string(HopMode m);

/// One iteration of the walk: from an off-axis vertex, over any on-axis run,
/// to the next off-axis vertex.
struct TraceStep {
  std::size_t start_index = 0;
  std::size_t end_index = 0;
  std::vector<std::size_t> skipped_indices;
  HopMode mode = HopMode::PositiveAxis;
  bool crossed = false;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Verdict {
  Classification classification = Classification::Outside;
  std::size_t crossing_count = 0;
  std::optional<std::vector<TraceStep>> trace;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Selects how auxiliary edges over on-axis runs are counted.
/// `PositiveAxisOnly` is the naive count that ignores the complete-axis rule;
/// it exists to demonstrate the failure the rule fixes and is wrong in general.
enum class CrossingPolicy { EvenOdd, PositiveAxisOnly };

struct ClassifyOptions {
  bool with_trace = false;
  CrossingPolicy policy = CrossingPolicy::EvenOdd;
};

/// Result of advancing from one off-axis vertex to the next.
struct OffAxisStep {
  std::size_t next = 0;
  std::vector<std::size_t> skipped;
};

/// True iff q equals a vertex of `poly` or lies on one of its closed edges,
/// including the closing edge.
bool is_on_boundary(const Polygon& poly, const Point& q);

/// Smallest index whose vertex is off the x-axis, or nullopt if every vertex
/// has y == 0. `ring` is expressed in the query frame.
template <VertexRing R>
std::optional<std::size_t> find_start_vertex(const R& ring) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (axis_sign(ring[i]) == AxisSign::OffAxis) return i;
  }
  return std::nullopt;
}

/// Walks cyclically from off-axis vertex `s` to the next off-axis vertex,
/// collecting the on-axis indices in between. Returns `s` itself if it is the
/// only off-axis vertex.
///
/// A skipped vertex at the origin, or a skipped run touching both halves of
/// the axis, means the query lies on the boundary; seeing either here throws
/// InternalLogicError.
template <VertexRing R>
OffAxisStep next_off_axis(const R& ring, std::size_t s) {
  const std::size_t n = ring.size();
  if (s >= n || axis_sign(ring[s]) != AxisSign::OffAxis) {
    throw InternalLogicError("next_off_axis must start at an off-axis vertex");
  }
  OffAxisStep step;
  AxisSign run_side = AxisSign::OffAxis;
  std::size_t i = s + 1 == n ? 0 : s + 1;
  while (true) {
    const AxisSign side = axis_sign(ring[i]);
    if (side == AxisSign::OffAxis) break;
    if (side == AxisSign::AtOrigin) {
      throw InternalLogicError("skipped vertex coincides with the query point");
    }
    if (run_side != AxisSign::OffAxis && side != run_side) {
      throw InternalLogicError("skipped run changes between positive and negative x-axis");
    }
    run_side = side;
    step.skipped.push_back(i);
    i = i + 1 == n ? 0 : i + 1;
  }
  step.next = i;
  return step;
}

/// Even-odd classification of q against `poly`, handling every degenerate
/// configuration without special cases:
///   1. q on a vertex or edge gives Boundary.
///   2. No vertex off the x-axis of q gives Outside.
///   3. Walk the off-axis vertices cyclically. A hop with no skipped vertices
///      is intersected with the positive x-axis; a hop over a run on the
///      positive axis is intersected with the complete axis; a hop over a run
///      on the negative axis counts nothing.
///   4. Odd count gives Inside.
Verdict classify(const Polygon& poly, const Point& q, const ClassifyOptions& options);

inline Verdict classify(const Polygon& poly, const Point& q, bool with_trace = false) {
  return classify(poly, q, ClassifyOptions{.with_trace = with_trace});
}

/// Same as classify, but a boundary query reports Inside.
Classification classify_paper_mode(const Polygon& poly, const Point& q);

/// Boundary collapses to Inside; other values pass through.
constexpr Classification collapse_boundary(Classification c) {
  return c == Classification::Boundary ? Classification::Inside : c;
}

}  // namespace evenodd
