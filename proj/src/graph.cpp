#include "polydetect/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace polydetect {

PlanarGraph PlanarGraph::build(std::vector<Point> vertices,
                               const std::vector<std::tuple<VertexId, VertexId, int>>& links) {
  const int n = static_cast<int>(vertices.size());
  for (const Point& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("non-finite vertex coordinate");
  }

  std::vector<GraphEdge> edges;
  edges.reserve(links.size());
  for (const auto& [a, b, parent] : links) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("vertex id out of range");
    if (a == b) throw std::invalid_argument("self-loop edge");
    GraphEdge e;
    e.u = std::min(a, b);
    e.v = std::max(a, b);
    e.parent_segment = parent;
    e.weight = distance(vertices[e.u], vertices[e.v]);
    if (!(e.weight > 0.0)) throw std::invalid_argument("zero-weight edge");
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
      throw std::invalid_argument("parallel edge");
  }

  PlanarGraph g;
  g.points_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    g.adj_[g.edges_[e].u].emplace_back(g.edges_[e].v, e);
    g.adj_[g.edges_[e].v].emplace_back(g.edges_[e].u, e);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::optional<EdgeId> PlanarGraph::edge_between(VertexId u, VertexId v) const {
  const auto& nbrs = adj_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(v, EdgeId{0}));
  if (it != nbrs.end() && it->first == v) return it->second;
  return std::nullopt;
}

double edge_weight(const PlanarGraph& g, EdgeId e, LengthMetric metric) {
  return metric == LengthMetric::HopCount ? 1.0 : g.edge(e).weight;
}

ComponentLabeling connected_components(const PlanarGraph& g) {
  ComponentLabeling out;
  out.label.assign(g.vertex_count(), -1);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (out.label[start] >= 0) continue;
    const int id = out.count++;
    std::queue<VertexId> frontier;
    frontier.push(start);
    out.label[start] = id;
    while (!frontier.empty()) {
      const VertexId v = frontier.front();
      frontier.pop();
      for (const auto& [w, e] : g.neighbors(v)) {
        (void)e;
        if (out.label[w] < 0) {
          out.label[w] = id;
          frontier.push(w);
        }
      }
    }
  }
  return out;
}

int cyclomatic_number(const PlanarGraph& g) {
  return g.edge_count() - g.vertex_count() + connected_components(g).count;
}

double ApspResult::dist(VertexId u, VertexId v) const {
  if (comp_[u] != comp_[v]) return kInfinity;
  const int c = comp_[u];
  const int n = static_cast<int>(members_[c].size());
  return dist_[c][static_cast<size_t>(local_[u]) * n + local_[v]];
}

bool ApspResult::reachable(VertexId u, VertexId v) const { return comp_[u] == comp_[v]; }

std::vector<VertexId> ApspResult::reconstruct_path(const PlanarGraph& g, VertexId u,
                                                   VertexId v) const {
  if (comp_[u] != comp_[v]) return {};
  std::vector<VertexId> path{u};
  VertexId cur = u;
  int guard = g.vertex_count() + 1;
  while (cur != v) {
    if (--guard < 0) throw std::logic_error("shortest-path reconstruction failed to terminate");
    const double remaining = dist(cur, v);
    VertexId next = -1;
    for (const auto& [w, e] : g.neighbors(cur)) {
      const double step = edge_weight(g, e, metric_);
      const double tol = 1e-12 * (1.0 + remaining);
      if (std::abs(step + dist(w, v) - remaining) <= tol) {
        next = w;  // neighbors are ascending, so the first hit is the smallest id
        break;
      }
    }
    if (next < 0) throw std::logic_error("shortest-path reconstruction found no next hop");
    path.push_back(next);
    cur = next;
  }
  return path;
}

ApspResult all_pairs_shortest_paths(const PlanarGraph& g, LengthMetric metric) {
  const ComponentLabeling comps = connected_components(g);
  ApspResult r;
  r.metric_ = metric;
  r.comp_ = comps.label;
  r.local_.assign(g.vertex_count(), -1);
  r.members_.assign(comps.count, {});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    r.local_[v] = static_cast<int>(r.members_[comps.label[v]].size());
    r.members_[comps.label[v]].push_back(v);
  }

  r.dist_.assign(comps.count, {});
  for (int c = 0; c < comps.count; ++c) {
    const auto& verts = r.members_[c];
    const int n = static_cast<int>(verts.size());
    auto& mat = r.dist_[c];
    mat.assign(static_cast<size_t>(n) * n, ApspResult::kInfinity);

    // Dijkstra from every vertex of the component.
    using HeapItem = std::pair<double, VertexId>;
    for (int si = 0; si < n; ++si) {
      double* row = mat.data() + static_cast<size_t>(si) * n;
      std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
      row[si] = 0.0;
      heap.emplace(0.0, verts[si]);
      while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > row[r.local_[v]]) continue;
        for (const auto& [w, e] : g.neighbors(v)) {
          const double nd = d + edge_weight(g, e, metric);
          if (nd < row[r.local_[w]]) {
            row[r.local_[w]] = nd;
            heap.emplace(nd, w);
          }
        }
      }
    }
  }
  return r;
}

}  // namespace polydetect
