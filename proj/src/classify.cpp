#include "evenodd/classify.hpp"

namespace evenodd {

namespace {

template <VertexRing R>
bool ring_contains_origin(const R& ring) {
  const Point origin(0, 0);
  const std::size_t n = ring.size();
  Point a = ring[n - 1];
  for (std::size_t i = 0; i < n; ++i) {
    Point b = ring[i];
    if (point_on_segment(a, b, origin)) return true;
    a = b;
  }
  return false;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Inside:
      return "inside";
    case Classification::Outside:
      return "outside";
    case Classification::Boundary:
      return "boundary";
  }
  return "unknown";
}

std::string_view to_string(HopMode m) {
  switch (m) {
    case HopMode::PositiveAxis:
      return "positive";
    case HopMode::CompleteAxis:
      return "complete";
    case HopMode::Skipped:
      return "none";
  }
  return "unknown";
}

bool is_on_boundary(const Polygon& poly, const Point& q) {
  return ring_contains_origin(QueryFrame(poly, q));
}

Verdict classify(const Polygon& poly, const Point& q, const ClassifyOptions& options) {
  const QueryFrame frame(poly, q);
  Verdict verdict;
  if (options.with_trace) verdict.trace.emplace();

  if (ring_contains_origin(frame)) {
    verdict.classification = Classification::Boundary;
    return verdict;
  }

  const std::optional<std::size_t> start = find_start_vertex(frame);
  if (!start) {
    verdict.classification = Classification::Outside;
    return verdict;
  }

  const bool naive = options.policy == CrossingPolicy::PositiveAxisOnly;
  std::size_t current = *start;
  Point from = frame[current];
  do {
    OffAxisStep step = next_off_axis(frame, current);
    const Point to = frame[step.next];

    HopMode mode = HopMode::PositiveAxis;
    if (!step.skipped.empty()) {
      mode = axis_sign(frame[step.skipped.front()]) == AxisSign::OnPositiveAxis
                 ? HopMode::CompleteAxis
                 : HopMode::Skipped;
    }
    if (naive) mode = HopMode::PositiveAxis;

    bool crossed = false;
    switch (mode) {
      case HopMode::PositiveAxis:
        crossed = axis_crossing(from, to, CrossingMode::PositiveAxis) == 1;
        break;
      case HopMode::CompleteAxis:
        crossed = axis_crossing(from, to, CrossingMode::CompleteAxis) == 1;
        break;
      case HopMode::Skipped:
        break;
    }
    if (crossed) ++verdict.crossing_count;

    if (verdict.trace) {
      verdict.trace->push_back(TraceStep{current, step.next, std::move(step.skipped), mode, crossed});
    }
    current = step.next;
    from = to;
  } while (current != *start);

  verdict.classification =
      verdict.crossing_count % 2 == 1 ? Classification::Inside : Classification::Outside;
  return verdict;
}

Classification classify_paper_mode(const Polygon& poly, const Point& q) {
  return collapse_boundary(classify(poly, q).classification);
}

}  // namespace evenodd
