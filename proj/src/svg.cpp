#include <algorithm>
#include <ostream>

#include "polydetect/io.hpp"

namespace polydetect {

namespace {

const char* kFills[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                        "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

}  // namespace

void write_svg(std::ostream& out, const SegmentSet& s, const PlanarGraph& g,
               const PolygonSet& polys) {
  double minx = 0.0, miny = 0.0, maxx = 1.0, maxy = 1.0;
  bool first = true;
  for (const Segment& seg : s.segments) {
    for (const Point& p : {seg.a, seg.b}) {
      if (first) {
        minx = maxx = p.x;
        miny = maxy = p.y;
        first = false;
      } else {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
      }
    }
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-6});
  const double margin = 0.05 * span;
  // Mirror y so the drawing's +y points up on screen.
  const auto fy = [&](double y) { return miny + maxy - y; };
  const auto num = format_number;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(minx - margin) << " "
      << num(miny - margin) << " " << num(maxx - minx + 2 * margin) << " "
      << num(maxy - miny + 2 * margin) << "\">\n";

  const double stroke = 0.006 * span;
  out << "  <g id=\"segments\" stroke=\"#c8c8c8\" stroke-width=\"" << num(stroke)
      << "\" stroke-linecap=\"round\">\n";
  for (const Segment& seg : s.segments) {
    out << "    <line x1=\"" << num(seg.a.x) << "\" y1=\"" << num(fy(seg.a.y)) << "\" x2=\""
        << num(seg.b.x) << "\" y2=\"" << num(fy(seg.b.y)) << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"graph\" stroke=\"#333333\" stroke-width=\"" << num(stroke * 0.5) << "\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Point& a = g.vertex(g.edge(e).u);
    const Point& b = g.vertex(g.edge(e).v);
    out << "    <line x1=\"" << num(a.x) << "\" y1=\"" << num(fy(a.y)) << "\" x2=\"" << num(b.x)
        << "\" y2=\"" << num(fy(b.y)) << "\"/>\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "    <circle cx=\"" << num(g.vertex(v).x) << "\" cy=\"" << num(fy(g.vertex(v).y))
        << "\" r=\"" << num(stroke * 1.5) << "\" fill=\"#333333\"/>\n";
  }
  out << "  </g>\n";

  if (polys.count() > 0) {
    out << "  <g id=\"polygons\" fill-opacity=\"0.4\" stroke=\"none\">\n";
    for (int k = 0; k < polys.count(); ++k) {
      const Polygon& poly = polys.polygons[k];
      out << "    <path fill=\"" << kFills[k % 8] << "\" d=\"";
      for (size_t i = 0; i < poly.ring.size(); ++i) {
        out << (i == 0 ? "M " : "L ") << num(poly.ring[i].x) << " " << num(fy(poly.ring[i].y))
            << " ";
      }
      out << "Z\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
}

}  // namespace polydetect
