#pragma once

#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "polydetect/geometry.hpp"

namespace polydetect {

using EdgeId = int;

enum class LengthMetric { Euclidean, HopCount };

struct GraphEdge {
  VertexId u = -1;  // u < v
  VertexId v = -1;
  double weight = 0.0;      // Euclidean distance between the endpoint coordinates
  int parent_segment = -1;  // input segment this edge came from; -1 for synthetic graphs
};

/// Simple undirected graph with a coordinate attached to every vertex.
/// Vertices are 0..V-1, edges 0..E-1 sorted by (u, v). No self-loops, no
/// parallel edges.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  /// Builds a graph from vertex coordinates and (u, v, parent) links.
  /// Throws std::invalid_argument on self-loops, parallel edges, ids out of
  /// range, or non-finite coordinates.
  static PlanarGraph build(std::vector<Point> vertices,
                           const std::vector<std::tuple<VertexId, VertexId, int>>& links);

  int vertex_count() const { return static_cast<int>(points_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Point& vertex(VertexId v) const { return points_[v]; }
  const std::vector<Point>& vertices() const { return points_; }
  const GraphEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  /// Neighbors of v as (neighbor, edge id) pairs, ascending by neighbor.
  const std::vector<std::pair<VertexId, EdgeId>>& neighbors(VertexId v) const { return adj_[v]; }
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

 private:
  std::vector<Point> points_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
};

double edge_weight(const PlanarGraph& g, EdgeId e, LengthMetric metric);

struct ComponentLabeling {
  std::vector<int> label;  // one label per vertex, 0..count-1
  int count = 0;
};

ComponentLabeling connected_components(const PlanarGraph& g);

/// Dimension of the cycle space: E - V + P.
int cyclomatic_number(const PlanarGraph& g);

/// All-pairs shortest paths. Distances are stored densely per connected
/// component; pairs in different components report infinity.
class ApspResult {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  double dist(VertexId u, VertexId v) const;
  bool reachable(VertexId u, VertexId v) const;

  /// Canonical shortest path from u to v, endpoints included. Among
  /// equal-weight paths the lexicographically smallest vertex sequence is
  /// returned. Empty when u and v are disconnected. g must be the graph the
  /// result was computed from.
  std::vector<VertexId> reconstruct_path(const PlanarGraph& g, VertexId u, VertexId v) const;

  LengthMetric metric() const { return metric_; }

 private:
  friend ApspResult all_pairs_shortest_paths(const PlanarGraph&, LengthMetric);

  std::vector<int> comp_;                     // vertex -> component
  std::vector<int> local_;                    // vertex -> index within component
  std::vector<std::vector<VertexId>> members_;  // component -> vertex ids
  std::vector<std::vector<double>> dist_;     // component -> row-major matrix
  LengthMetric metric_ = LengthMetric::Euclidean;
};

ApspResult all_pairs_shortest_paths(const PlanarGraph& g,
                                    LengthMetric metric = LengthMetric::Euclidean);

}  // namespace polydetect
