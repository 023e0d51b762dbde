#pragma once

#include "polydetect/graph.hpp"
#include "polydetect/mcb.hpp"
#include "polydetect/polygon.hpp"
#include "polydetect/sweep.hpp"

namespace polydetect {

struct DetectConfig {
  Tolerance tolerance{};
  LengthMetric metric = LengthMetric::Euclidean;
  bool emit_stats = false;  // include per-stage timings in serialized output
};

struct StageTimes {
  double graph_ms = 0.0;     // intersection sweep + induced graph
  double mcb_ms = 0.0;       // APSP + candidates + elimination
  double polygons_ms = 0.0;  // cycle-to-ring conversion
  double total_ms = 0.0;
};

struct RunStats {
  int lines = 0;          // N
  int intersections = 0;  // M
  int nodes = 0;          // V
  int edges = 0;          // E
  int components = 0;     // P
  int cyclomatic = 0;     // nu = E - V + P
  int polygons = 0;       // C
  StageTimes times;
};

struct DetectResult {
  PolygonSet polygons;
  RunStats stats;
  PlanarGraph graph;
};

/// Full pipeline: sweep -> induced graph -> minimum cycle basis -> polygons.
/// Throws ValidationError (zero-length or non-finite segments, by index) and
/// OverlapError (collinear overlapping pair, by indices).
DetectResult detect_polygons(const SegmentSet& s, const DetectConfig& cfg = {});

}  // namespace polydetect
