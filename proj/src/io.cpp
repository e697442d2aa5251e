#include "evenodd/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace evenodd::io {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()) || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

enum class NumberStatus { Ok, Malformed, OutOfRange, NonFinite };

NumberStatus parse_number(std::string_view token, double& value) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return NumberStatus::Malformed;
  const char* first = token.data();
  const char* last = first + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec == std::errc::result_out_of_range) return NumberStatus::OutOfRange;
  if (ec != std::errc{} || ptr != last) return NumberStatus::Malformed;
  if (!std::isfinite(value)) return NumberStatus::NonFinite;
  return NumberStatus::Ok;
}

std::string describe(NumberStatus status, std::string_view token) {
  switch (status) {
    case NumberStatus::Malformed:
      return "malformed number '" + std::string(token) + "'";
    case NumberStatus::OutOfRange:
      return "number out of range '" + std::string(token) + "'";
    case NumberStatus::NonFinite:
      return "non-finite value '" + std::string(token) + "'";
    case NumberStatus::Ok:
      break;
  }
  return "ok";
}

std::vector<Point> parse_coordinate_lines(std::string_view text, std::size_t& line_count) {
  std::vector<Point> points;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t newline = text.find('\n', pos);
    const std::size_t end = newline == std::string_view::npos ? text.size() : newline;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::array<std::string_view, 2> fields;
    std::size_t field_count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (field_count < fields.size()) fields[field_count] = line.substr(i, j - i);
      ++field_count;
      i = j;
    }
    const SourceLocation where{SourceLocation::Kind::Line, line_no};
    if (field_count != 2) {
      throw ParseError("expected 2 fields, found " + std::to_string(field_count), where);
    }
    std::array<double, 2> xy{};
    for (std::size_t k = 0; k < 2; ++k) {
      const NumberStatus status = parse_number(fields[k], xy[k]);
      if (status != NumberStatus::Ok) throw ParseError(describe(status, fields[k]), where);
    }
    points.emplace_back(xy[0], xy[1]);
  }
  line_count = line_no;
  return points;
}

// Drops a trailing copy of the first vertex. Returns true if one was dropped.
bool drop_closing_vertex(std::vector<Point>& vertices) {
  if (vertices.size() >= 2 && vertices.back() == vertices.front()) {
    vertices.pop_back();
    return true;
  }
  return false;
}

class WktParser {
 public:
  explicit WktParser(std::string_view text) : text_(text) {}

  std::vector<Point> parse_single_ring() {
    skip_space();
    expect_keyword("POLYGON");
    skip_space();
    if (at_word()) {
      const std::size_t at = pos_;
      const std::string word = read_word();
      if (word == "EMPTY") throw ParseError("empty polygon has no vertices", offset(at));
      throw UnsupportedFeatureError("unsupported POLYGON modifier '" + word + "'", offset(at));
    }
    expect('(');
    std::vector<Point> ring = parse_ring();
    skip_space();
    if (peek() == ',') {
      throw UnsupportedFeatureError("polygons with more than one ring (holes) are not supported",
                                    offset(pos_));
    }
    expect(')');
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing text", offset(pos_));
    return ring;
  }

 private:
  static SourceLocation offset(std::size_t at) {
    return {SourceLocation::Kind::ByteOffset, at};
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && (is_space(text_[pos_]) || text_[pos_] == '\n')) ++pos_;
  }

  bool at_word() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  std::string read_word() {
    std::string word;
    while (at_word()) word.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++]))));
    return word;
  }

  void expect_keyword(std::string_view keyword) {
    const std::size_t at = pos_;
    if (read_word() != keyword) {
      throw ParseError("expected '" + std::string(keyword) + "'", offset(at));
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", offset(pos_));
    }
    ++pos_;
  }

  double parse_coordinate() {
    skip_space();
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < text_.size()) {
      const char c = text_[end];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-') {
        ++end;
      } else {
        break;
      }
    }
    const std::string_view token = text_.substr(at, end - at);
    if (token.empty()) throw ParseError("expected a number", offset(at));
    double value = 0;
    const NumberStatus status = parse_number(token, value);
    if (status != NumberStatus::Ok) throw ParseError(describe(status, token), offset(at));
    pos_ = end;
    return value;
  }

  std::vector<Point> parse_ring() {
    expect('(');
    std::vector<Point> ring;
    while (true) {
      const double x = parse_coordinate();
      const double y = parse_coordinate();
      ring.emplace_back(x, y);
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        return ring;
      }
      throw ParseError("expected ',' or ')' after a coordinate pair", offset(pos_));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_index_list(std::string& out, const std::vector<std::size_t>& indices) {
  out += '[';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices[i]);
  }
  out += ']';
}

}  // namespace

ParseError::ParseError(const std::string& message, SourceLocation location)
    : std::runtime_error(
          (location.kind == SourceLocation::Kind::Line ? "line " : "byte offset ") +
          std::to_string(location.value) + ": " + message),
      location_(location) {}

PolygonDocument parse_polygon_plaintext(std::string_view text, std::string source_name) {
  std::size_t line_count = 0;
  std::vector<Point> vertices = parse_coordinate_lines(text, line_count);
  if (vertices.empty()) {
    throw ParseError("polygon has no vertices",
                     {SourceLocation::Kind::Line, std::max<std::size_t>(line_count, 1)});
  }
  const bool dropped = drop_closing_vertex(vertices);
  return {Polygon(std::move(vertices)), std::move(source_name), PolygonFormat::PlainText, dropped};
}

PolygonDocument parse_polygon_wkt(std::string_view text, std::string source_name) {
  std::vector<Point> vertices = WktParser(text).parse_single_ring();
  const bool dropped = drop_closing_vertex(vertices);
  return {Polygon(std::move(vertices)), std::move(source_name), PolygonFormat::WktSubset, dropped};
}

PolygonDocument parse_polygon(std::string_view text, std::string source_name) {
  const std::string_view head = trim(text).substr(0, 7);
  std::string upper;
  for (char c : head) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "POLYGON") return parse_polygon_wkt(text, std::move(source_name));
  return parse_polygon_plaintext(text, std::move(source_name));
}

std::vector<Point> parse_points_plaintext(std::string_view text) {
  std::size_t line_count = 0;
  return parse_coordinate_lines(text, line_count);
}

Point parse_point_pair(std::string_view text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("expected 'x,y'", {SourceLocation::Kind::ByteOffset, 0});
  }
  const std::array<std::pair<std::string_view, std::size_t>, 2> parts{
      std::pair{trim(text.substr(0, comma)), std::size_t{0}},
      std::pair{trim(text.substr(comma + 1)), comma + 1}};
  std::array<double, 2> xy{};
  for (std::size_t k = 0; k < 2; ++k) {
    const NumberStatus status = parse_number(parts[k].first, xy[k]);
    if (status != NumberStatus::Ok) {
      throw ParseError(describe(status, parts[k].first),
                       {SourceLocation::Kind::ByteOffset, parts[k].second});
    }
  }
  return Point(xy[0], xy[1]);
}

std::string format_number(double value) {
  std::array<char, 32> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

std::string serialize_polygon_plaintext(const Polygon& polygon) {
  std::string out;
  for (const Point& v : polygon) {
    out += format_number(v.x());
    out += ' ';
    out += format_number(v.y());
    out += '\n';
  }
  // A ring that already ends on its first vertex would lose that vertex to
  // the closing-vertex rule on the way back in, so write one more copy.
  if (polygon.size() >= 2 && polygon[polygon.size() - 1] == polygon[0]) {
    out += format_number(polygon[0].x()) + ' ' + format_number(polygon[0].y()) + '\n';
  }
  return out;
}

std::string serialize_polygon_wkt(const Polygon& polygon) {
  std::string out = "POLYGON ((";
  for (const Point& v : polygon) {
    out += format_number(v.x());
    out += ' ';
    out += format_number(v.y());
    out += ", ";
  }
  out += format_number(polygon[0].x()) + ' ' + format_number(polygon[0].y()) + "))";
  return out;
}

QueryResultRecord QueryResultRecord::from_verdict(const Point& query, const Verdict& verdict) {
  return {query, verdict.classification, verdict.crossing_count, verdict.trace};
}

std::string serialize_result(const QueryResultRecord& record) {
  std::string out = "{\"x\":";
  out += format_number(record.query.x());
  out += ",\"y\":";
  out += format_number(record.query.y());
  out += ",\"result\":\"";
  out += to_string(record.classification);
  out += "\",\"crossings\":";
  out += std::to_string(record.crossing_count);
  if (record.trace) {
    out += ",\"trace\":[";
    for (std::size_t i = 0; i < record.trace->size(); ++i) {
      const TraceStep& step = (*record.trace)[i];
      if (i > 0) out += ',';
      out += "{\"from\":" + std::to_string(step.start_index) + ",\"skipped\":";
      append_index_list(out, step.skipped_indices);
      out += ",\"to\":" + std::to_string(step.end_index);
      out += ",\"axis\":\"";
      out += to_string(step.mode);
      out += "\",\"intersection\":\"";
      out += step.crossed ? "yes" : "no";
      out += "\"}";
    }
    out += ']';
  }
  out += "}\n";
  return out;
}

std::string serialize_results(std::span<const QueryResultRecord> records) {
  std::string out;
  for (const QueryResultRecord& record : records) out += serialize_result(record);
  return out;
}

}  // namespace evenodd::io
