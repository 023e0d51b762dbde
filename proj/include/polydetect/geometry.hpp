#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace polydetect {

using VertexId = int;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool lex_less(const Point& p, const Point& q) {
  return p.x != q.x ? p.x < q.x : p.y < q.y;
}

inline bool bitwise_equal(const Point& p, const Point& q) {
  return p.x == q.x && p.y == q.y;
}

struct Segment {
  Point a;
  Point b;
};

/// Snapping tolerance in drawing units. Two points whose coordinates differ
/// by at most eps in each axis (max-norm) are treated as one vertex.
struct Tolerance {
  double eps = 1e-9;
};

enum class IntersectionKind { None, ProperPoint, EndpointTouch, CollinearOverlap };

struct IntersectionResult {
  IntersectionKind kind = IntersectionKind::None;
  std::optional<Point> point;  // present for ProperPoint and EndpointTouch
};

/// Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right turn,
/// 0 when r lies on the line through p and q. With eps > 0, "on the line"
/// means within perpendicular distance eps.
int orient(const Point& p, const Point& q, const Point& r, double eps = 0.0);

bool same_point(const Point& p, const Point& q, const Tolerance& tol);

double distance(const Point& p, const Point& q);
double point_segment_distance(const Point& p, const Segment& s);

/// True when p lies within tol.eps of s, endpoints included.
bool on_segment(const Point& p, const Segment& s, const Tolerance& tol);

/// Classifies how two segments meet. T-junctions (an endpoint interior to the
/// other segment) count as ProperPoint because they become graph vertices; a
/// pure shared endpoint does not. Symmetric in its arguments, including the
/// reported point.
IntersectionResult intersect_segments(const Segment& s, const Segment& t, const Tolerance& tol);

/// Deduplicates points under the snapping tolerance. Returns one VertexId per
/// input point; ids index into *representatives, which come out sorted by
/// (x, y). The result depends only on the point set, not its order.
std::vector<VertexId> canonicalize(const std::vector<Point>& points, const Tolerance& tol,
                                   std::vector<Point>* representatives = nullptr);

}  // namespace polydetect
