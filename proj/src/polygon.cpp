#include "polydetect/polygon.hpp"

#include <algorithm>
#include <map>

namespace polydetect {

double signed_polygon_area(const std::vector<Point>& ring) {
  double twice = 0.0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

double polygon_area(const std::vector<Point>& ring) { return std::abs(signed_polygon_area(ring)); }

PolygonSet polygons_from_cycles(const CycleBasis& basis, const PlanarGraph& g) {
  PolygonSet out;
  out.polygons.reserve(basis.cycles.size());

  for (size_t c = 0; c < basis.cycles.size(); ++c) {
    const Cycle& cycle = basis.cycles[c];
    std::map<VertexId, std::vector<VertexId>> adj;
    for (EdgeId e : cycle.edges) {
      adj[g.edge(e).u].push_back(g.edge(e).v);
      adj[g.edge(e).v].push_back(g.edge(e).u);
    }
    for (auto& [v, nbrs] : adj) {
      if (nbrs.size() != 2) throw MalformedCycleError("cycle vertex degree is not two");
      std::sort(nbrs.begin(), nbrs.end());
    }

    std::vector<VertexId> walk;
    walk.reserve(cycle.edges.size());
    const VertexId start = adj.begin()->first;  // map keys ascend: lowest id
    VertexId prev = -1;
    VertexId cur = start;
    do {
      walk.push_back(cur);
      const auto& nbrs = adj[cur];
      const VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
    } while (cur != start && walk.size() <= cycle.edges.size());
    if (cur != start || walk.size() != cycle.edges.size())
      throw MalformedCycleError("cycle is not a single closed walk");

    Polygon poly;
    poly.ring.reserve(walk.size());
    for (VertexId v : walk) poly.ring.push_back(g.vertex(v));
    const double signed_area = signed_polygon_area(poly.ring);
    if (signed_area == 0.0) throw MalformedCycleError("cycle encloses zero area");
    if (signed_area < 0.0) std::reverse(poly.ring.begin() + 1, poly.ring.end());
    poly.area = std::abs(signed_area);
    poly.source_cycle = static_cast<int>(c);
    out.polygons.push_back(std::move(poly));
  }
  return out;
}

}  // namespace polydetect
