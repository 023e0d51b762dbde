#pragma once

#include <vector>

#include "polydetect/errors.hpp"
#include "polydetect/geometry.hpp"
#include "polydetect/graph.hpp"

namespace polydetect {

struct SegmentSet {
  std::vector<Segment> segments;
  int count() const { return static_cast<int>(segments.size()); }
};

/// One proper intersection point together with every segment through it.
struct IntersectionEvent {
  Point point;
  std::vector<int> segments;  // ascending input indices, at least two
};

inline bool operator==(const IntersectionEvent& a, const IntersectionEvent& b) {
  return bitwise_equal(a.point, b.point) && a.segments == b.segments;
}

struct IntersectionReport {
  std::vector<IntersectionEvent> events;  // sorted by (x, y)
  int count() const { return static_cast<int>(events.size()); }
};

inline bool operator==(const IntersectionReport& a, const IntersectionReport& b) {
  return a.events == b.events;
}

std::vector<ValidationIssue> validate_segment_set(const SegmentSet& s, const Tolerance& tol);

/// Sweep-line intersection detection. Reports proper intersections only
/// (including T-junctions); shared endpoints are not events. Throws
/// OverlapError on collinear overlapping pairs and ValidationError on
/// zero-length or non-finite segments.
IntersectionReport find_intersections(const SegmentSet& s, const Tolerance& tol = {});

/// Splits every segment at the reported intersection points and returns the
/// simple graph of the resulting sub-segments. Vertices are the canonicalized
/// endpoints and intersection points, sorted by (x, y).
PlanarGraph build_induced_graph(const SegmentSet& s, const IntersectionReport& report,
                                const Tolerance& tol = {});

PlanarGraph compute_induced_graph(const SegmentSet& s, const Tolerance& tol = {});

}  // namespace polydetect
