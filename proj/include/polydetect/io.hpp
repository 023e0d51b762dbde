#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "polydetect/pipeline.hpp"
#include "polydetect/sweep.hpp"

namespace polydetect {

/// A data line did not parse to four finite decimals.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedSegments {
  SegmentSet set;
  std::vector<int> line_numbers;  // 1-based source line per segment
};

/// Reads "x1 y1 x2 y2" per line; '#' comments and blank lines are skipped.
ParsedSegments read_segment_file(std::istream& in);

/// Deterministic JSON: stats first, then polygons sorted by (area, ring),
/// floats at 9 significant digits. Timings appear only when requested, since
/// they vary run to run.
std::string to_json(const DetectResult& result, bool include_timings);

/// Formats a double exactly as the JSON and SVG emitters do.
std::string format_number(double v);

/// Three-layer figure: input segments, induced graph, filled polygons.
void write_svg(std::ostream& out, const SegmentSet& s, const PlanarGraph& g,
               const PolygonSet& polys);

}  // namespace polydetect
