#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evenodd/classify.hpp"
#include "evenodd/geometry.hpp"

namespace evenodd::io {

enum class PolygonFormat { PlainText, WktSubset };

/// Where a parse error happened: a 1-based line for the plain-text format,
/// a 0-based byte offset for WKT.
struct SourceLocation {
  enum class Kind { Line, ByteOffset };
  Kind kind = Kind::Line;
  std::size_t value = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceLocation location);

  const SourceLocation& location() const { return location_; }

 private:
  SourceLocation location_;
};

/// Valid syntax for a feature this model does not support (e.g. WKT holes).
class UnsupportedFeatureError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct PolygonDocument {
  Polygon polygon;
  std::string source_name;
  PolygonFormat format = PolygonFormat::PlainText;
  /// Set when an explicit closing vertex (last == first) was dropped.
  bool dropped_closing_vertex = false;
};

/// One "x y" pair per line. Blank lines and lines starting with '#' are
/// ignored. A final vertex equal to the first is dropped.
PolygonDocument parse_polygon_plaintext(std::string_view text,
                                        std::string source_name = "<input>");

/// A single `POLYGON ((x y, ...))` ring. The repeated closing vertex is
/// dropped; a second ring raises UnsupportedFeatureError.
PolygonDocument parse_polygon_wkt(std::string_view text, std::string source_name = "<input>");

/// Picks WKT if the first non-blank text starts with "POLYGON"
/// (case-insensitive), otherwise plain text.
PolygonDocument parse_polygon(std::string_view text, std::string source_name = "<input>");

/// Points in the plain-text vertex format. Zero points is valid.
std::vector<Point> parse_points_plaintext(std::string_view text);

/// Parses "x,y".
Point parse_point_pair(std::string_view text);

std::string serialize_polygon_plaintext(const Polygon& polygon);
std::string serialize_polygon_wkt(const Polygon& polygon);

/// Shortest decimal text that reads back as exactly `value`.
std::string format_number(double value);

struct QueryResultRecord {
  Point query;
  Classification classification = Classification::Outside;
  std::size_t crossing_count = 0;
  std::optional<std::vector<TraceStep>> trace;

  static QueryResultRecord from_verdict(const Point& query, const Verdict& verdict);
};

/// One JSON object terminated by '\n', fields in the order
/// x, y, result, crossings, trace.
std::string serialize_result(const QueryResultRecord& record);

std::string serialize_results(std::span<const QueryResultRecord> records);

}  // namespace evenodd::io
