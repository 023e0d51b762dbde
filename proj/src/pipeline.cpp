#include "polydetect/pipeline.hpp"

#include <chrono>

namespace polydetect {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

DetectResult detect_polygons(const SegmentSet& s, const DetectConfig& cfg) {
  std::vector<ValidationIssue> issues = validate_segment_set(s, cfg.tolerance);
  if (!issues.empty()) throw ValidationError("invalid segment set", std::move(issues));

  const auto t0 = std::chrono::steady_clock::now();
  const IntersectionReport report = find_intersections(s, cfg.tolerance);
  DetectResult result{{}, {}, build_induced_graph(s, report, cfg.tolerance)};
  result.stats.times.graph_ms = ms_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const CycleBasis basis = minimum_cycle_basis(result.graph, cfg.metric);
  result.stats.times.mcb_ms = ms_since(t1);

  const auto t2 = std::chrono::steady_clock::now();
  result.polygons = polygons_from_cycles(basis, result.graph);
  result.stats.times.polygons_ms = ms_since(t2);
  result.stats.times.total_ms = ms_since(t0);

  result.stats.lines = s.count();
  result.stats.intersections = report.count();
  result.stats.nodes = result.graph.vertex_count();
  result.stats.edges = result.graph.edge_count();
  result.stats.components = connected_components(result.graph).count;
  result.stats.cyclomatic = cyclomatic_number(result.graph);
  result.stats.polygons = result.polygons.count();
  return result;
}

}  // namespace polydetect
