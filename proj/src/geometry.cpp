#include "polydetect/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace polydetect {

int orient(const Point& p, const Point& q, const Point& r, double eps) {
  const double cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  if (eps > 0.0 && std::abs(cross) <= eps * distance(p, q)) return 0;
  return cross > 0.0 ? 1 : (cross < 0.0 ? -1 : 0);
}

bool same_point(const Point& p, const Point& q, const Tolerance& tol) {
  return std::abs(p.x - q.x) <= tol.eps && std::abs(p.y - q.y) <= tol.eps;
}

double distance(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double point_segment_distance(const Point& p, const Segment& s) {
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return distance(p, s.a);
  double t = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, Point{s.a.x + t * dx, s.a.y + t * dy});
}

bool on_segment(const Point& p, const Segment& s, const Tolerance& tol) {
  return point_segment_distance(p, s) <= tol.eps;
}

namespace {

Segment normalized(const Segment& s) {
  return lex_less(s.a, s.b) ? s : Segment{s.b, s.a};
}

bool segment_pair_less(const Segment& s, const Segment& t) {
  if (!bitwise_equal(s.a, t.a)) return lex_less(s.a, t.a);
  return lex_less(s.b, t.b);
}

double line_distance(const Point& p, const Segment& s) {
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return distance(p, s.a);
  return std::abs(dx * (p.y - s.a.y) - dy * (p.x - s.a.x)) / len;
}

// Lexicographically smallest endpoint shared by s and t, if any.
std::optional<Point> shared_endpoint(const Segment& s, const Segment& t, const Tolerance& tol) {
  std::optional<Point> best;
  for (const Point& pe : {s.a, s.b}) {
    for (const Point& qe : {t.a, t.b}) {
      if (!same_point(pe, qe, tol)) continue;
      const Point cand = lex_less(pe, qe) ? pe : qe;
      if (!best || lex_less(cand, *best)) best = cand;
    }
  }
  return best;
}

}  // namespace

IntersectionResult intersect_segments(const Segment& s_in, const Segment& t_in,
                                      const Tolerance& tol) {
  Segment s = normalized(s_in);
  Segment t = normalized(t_in);
  if (segment_pair_less(t, s)) std::swap(s, t);  // canonical order makes the result symmetric
  const double eps = tol.eps;

  const bool collinear = line_distance(t.a, s) <= eps && line_distance(t.b, s) <= eps &&
                         line_distance(s.a, t) <= eps && line_distance(s.b, t) <= eps;
  if (collinear) {
    const double dx = s.b.x - s.a.x;
    const double dy = s.b.y - s.a.y;
    const double len = std::hypot(dx, dy);
    const double ux = dx / len;
    const double uy = dy / len;
    double t0 = (t.a.x - s.a.x) * ux + (t.a.y - s.a.y) * uy;
    double t1 = (t.b.x - s.a.x) * ux + (t.b.y - s.a.y) * uy;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0);
    const double hi = std::min(len, t1);
    if (hi - lo > eps) return {IntersectionKind::CollinearOverlap, std::nullopt};
    if (hi - lo >= -eps) {
      if (auto p = shared_endpoint(s, t, tol)) return {IntersectionKind::EndpointTouch, *p};
    }
    return {IntersectionKind::None, std::nullopt};
  }

  if (auto p = shared_endpoint(s, t, tol)) return {IntersectionKind::EndpointTouch, *p};

  // T-junction: an endpoint lying in the other segment's interior.
  {
    std::optional<Point> best;
    auto consider = [&](const Point& e, const Segment& other) {
      if (point_segment_distance(e, other) > eps) return;
      if (same_point(e, other.a, tol) || same_point(e, other.b, tol)) return;
      if (!best || lex_less(e, *best)) best = e;
    };
    consider(t.a, s);
    consider(t.b, s);
    consider(s.a, t);
    consider(s.b, t);
    if (best) return {IntersectionKind::ProperPoint, *best};
  }

  const int d1 = orient(s.a, s.b, t.a);
  const int d2 = orient(s.a, s.b, t.b);
  const int d3 = orient(t.a, t.b, s.a);
  const int d4 = orient(t.a, t.b, s.b);
  if (d1 * d2 < 0 && d3 * d4 < 0) {
    const double rx = s.b.x - s.a.x;
    const double ry = s.b.y - s.a.y;
    const double qx = t.b.x - t.a.x;
    const double qy = t.b.y - t.a.y;
    const double denom = rx * qy - ry * qx;
    const double u = ((t.a.x - s.a.x) * qy - (t.a.y - s.a.y) * qx) / denom;
    return {IntersectionKind::ProperPoint, Point{s.a.x + u * rx, s.a.y + u * ry}};
  }
  return {IntersectionKind::None, std::nullopt};
}

std::vector<VertexId> canonicalize(const std::vector<Point>& points, const Tolerance& tol,
                                   std::vector<Point>* representatives) {
  std::vector<size_t> order(points.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return lex_less(points[i], points[j]); });

  std::vector<Point> reps;
  std::vector<VertexId> ids(points.size(), -1);
  for (size_t idx : order) {
    const Point& p = points[idx];
    int chosen = -1;
    double chosen_norm = 0.0;
    for (int j = static_cast<int>(reps.size()) - 1; j >= 0 && reps[j].x >= p.x - tol.eps; --j) {
      const double norm = std::max(std::abs(reps[j].x - p.x), std::abs(reps[j].y - p.y));
      if (norm > tol.eps) continue;
      if (chosen < 0 || norm < chosen_norm || (norm == chosen_norm && j < chosen)) {
        chosen = j;
        chosen_norm = norm;
      }
    }
    if (chosen < 0) {
      reps.push_back(p);
      chosen = static_cast<int>(reps.size()) - 1;
    }
    ids[idx] = chosen;
  }
  if (representatives) *representatives = std::move(reps);
  return ids;
}

}  // namespace polydetect
