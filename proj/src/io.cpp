#include "polydetect/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <sstream>

namespace polydetect {

ParsedSegments read_segment_file(std::istream& in) {
  ParsedSegments out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    double v[4];
    for (int k = 0; k < 4; ++k) {
      if (!(fields >> v[k]))
        throw ParseError(lineno, "expected four decimals \"x1 y1 x2 y2\"");
    }
    std::string tail;
    if (fields >> tail) throw ParseError(lineno, "trailing content after four decimals");
    for (int k = 0; k < 4; ++k) {
      if (!std::isfinite(v[k])) throw ParseError(lineno, "non-finite coordinate");
    }
    out.set.segments.push_back({{v[0], v[1]}, {v[2], v[3]}});
    out.line_numbers.push_back(lineno);
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // -0.0 and 0.0 must print alike
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string to_json(const DetectResult& result, bool include_timings) {
  const RunStats& st = result.stats;
  std::string out = "{\n  \"stats\": {";
  out += "\"n\": " + std::to_string(st.lines);
  out += ", \"m\": " + std::to_string(st.intersections);
  out += ", \"v\": " + std::to_string(st.nodes);
  out += ", \"e\": " + std::to_string(st.edges);
  out += ", \"p\": " + std::to_string(st.components);
  out += ", \"nu\": " + std::to_string(st.cyclomatic);
  out += ", \"c\": " + std::to_string(st.polygons);
  if (include_timings) {
    out += ", \"ms_per_stage\": {\"graph\": " + format_number(st.times.graph_ms);
    out += ", \"mcb\": " + format_number(st.times.mcb_ms);
    out += ", \"polygons\": " + format_number(st.times.polygons_ms);
    out += ", \"total\": " + format_number(st.times.total_ms) + "}";
  }
  out += "},\n  \"polygons\": [";

  std::vector<int> order(result.polygons.polygons.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Polygon& pa = result.polygons.polygons[a];
    const Polygon& pb = result.polygons.polygons[b];
    if (pa.area != pb.area) return pa.area < pb.area;
    return std::lexicographical_compare(pa.ring.begin(), pa.ring.end(), pb.ring.begin(),
                                        pb.ring.end(), lex_less);
  });

  for (size_t k = 0; k < order.size(); ++k) {
    const Polygon& poly = result.polygons.polygons[order[k]];
    out += k == 0 ? "\n" : ",\n";
    out += "    {\"area\": " + format_number(poly.area) + ", \"ring\": [";
    for (size_t i = 0; i < poly.ring.size(); ++i) {
      if (i) out += ", ";
      out += "[" + format_number(poly.ring[i].x) + ", " + format_number(poly.ring[i].y) + "]";
    }
    out += "]}";
  }
  out += order.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace polydetect
