#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "polydetect/graph.hpp"
#include "polydetect/sweep.hpp"

namespace fixtures {

using polydetect::PlanarGraph;
using polydetect::Point;
using polydetect::Segment;
using polydetect::SegmentSet;

// 3 horizontals x 3 verticals: N=6, M=9, V=21, E=24, nu=4 (four unit cells).
inline SegmentSet grid() {
  SegmentSet s;
  for (double y : {1.0, 2.0, 3.0}) s.segments.push_back({{0, y}, {4, y}});
  for (double x : {1.0, 2.0, 3.0}) s.segments.push_back({{x, 0}, {x, 4}});
  return s;
}

// 4 sides + both diagonals: M=1, V=5, E=8, nu=4 (four corner triangles).
inline SegmentSet square_with_diagonals(double side = 2.0) {
  const double s = side;
  SegmentSet out;
  out.segments = {
      {{0, 0}, {s, 0}}, {{s, 0}, {s, s}}, {{s, s}, {0, s}},
      {{0, s}, {0, 0}}, {{0, 0}, {s, s}}, {{s, 0}, {0, s}},
  };
  return out;
}

// Two disjoint triangles of area 6: M=0, V=6, E=6, P=2, nu=2.
inline SegmentSet two_triangles() {
  SegmentSet s;
  for (double dx : {0.0, 10.0}) {
    s.segments.push_back({{dx + 0, 0}, {dx + 4, 0}});
    s.segments.push_back({{dx + 4, 0}, {dx + 2, 3}});
    s.segments.push_back({{dx + 2, 3}, {dx + 0, 0}});
  }
  return s;
}

// One crossing, no cycles: V=5, E=4, nu=0.
inline SegmentSet x_cross() {
  return {{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}}};
}

// Shared endpoints only: zero proper intersections.
inline SegmentSet triangle() {
  return {{{{0, 0}, {4, 0}}, {{4, 0}, {2, 3}}, {{2, 3}, {0, 0}}}};
}

inline SegmentSet shuffled(SegmentSet s, std::mt19937& rng) {
  std::shuffle(s.segments.begin(), s.segments.end(), rng);
  return s;
}

// Random segments in [0,10]^2. A share of them start exactly on an earlier
// segment's interior (T-junctions) or reuse an earlier endpoint (touches).
inline SegmentSet random_segments(std::mt19937& rng, int n, bool degenerate_mix) {
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SegmentSet s;
  for (int i = 0; i < n; ++i) {
    Point a{coord(rng), coord(rng)};
    if (degenerate_mix && i > 0 && unit(rng) < 0.25) {
      const Segment& host = s.segments[static_cast<size_t>(unit(rng) * i)];
      const double t = 0.2 + 0.6 * unit(rng);
      if (unit(rng) < 0.5) {
        a = {host.a.x + t * (host.b.x - host.a.x), host.a.y + t * (host.b.y - host.a.y)};
      } else {
        a = unit(rng) < 0.5 ? host.a : host.b;
      }
    }
    const Point b{coord(rng), coord(rng)};
    s.segments.push_back({a, b});
  }
  return s;
}

// Sparse arrangement: short segments keep the intersection count near-linear.
inline SegmentSet sparse_random(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  const double len = 1.5 / std::sqrt(static_cast<double>(n));
  SegmentSet s;
  s.segments.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Point c{unit(rng), unit(rng)};
    const double ang = angle(rng);
    const double half = 0.5 * len * (0.5 + unit(rng));
    s.segments.push_back({{c.x - half * std::cos(ang), c.y - half * std::sin(ang)},
                          {c.x + half * std::cos(ang), c.y + half * std::sin(ang)}});
  }
  return s;
}

// Random connected graph with 3..7 vertices, at most 12 edges, coordinates in
// the unit square (weights follow from them).
inline PlanarGraph random_connected_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv_dist(3, 7);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  const int nv = nv_dist(rng);

  std::vector<Point> pts;
  pts.reserve(nv);
  for (int v = 0; v < nv; ++v) pts.push_back({coord(rng), coord(rng)});

  std::vector<std::pair<int, int>> present;
  std::vector<std::tuple<int, int, int>> links;
  auto add = [&](int u, int v) {
    const std::pair<int, int> key = std::minmax(u, v);
    if (std::find(present.begin(), present.end(), key) != present.end()) return;
    present.push_back(key);
    links.emplace_back(key.first, key.second, -1);
  };
  for (int v = 1; v < nv; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    add(pick(rng), v);
  }
  const int max_extra = std::min(12 - (nv - 1), nv * (nv - 1) / 2 - (nv - 1));
  std::uniform_int_distribution<int> extra_dist(0, max_extra);
  std::uniform_int_distribution<int> pick(0, nv - 1);
  for (int k = extra_dist(rng); k > 0; --k) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u != v) add(u, v);
  }
  return PlanarGraph::build(std::move(pts), links);
}

// Ring of `r` diamond gadgets: 4r edges, r + 2^r elementary cycles.
inline PlanarGraph diamond_ring(int r) {
  std::vector<Point> pts;
  std::vector<std::tuple<int, int, int>> links;
  const double tau = 6.283185307179586;
  for (int i = 0; i < r; ++i) pts.push_back({2 * std::cos(tau * i / r), 2 * std::sin(tau * i / r)});
  for (int i = 0; i < r; ++i) {
    const double mid = tau * (i + 0.5) / r;
    const int outer = static_cast<int>(pts.size());
    pts.push_back({2.6 * std::cos(mid), 2.6 * std::sin(mid)});
    const int inner = static_cast<int>(pts.size());
    pts.push_back({1.4 * std::cos(mid), 1.4 * std::sin(mid)});
    const int next = (i + 1) % r;
    links.emplace_back(i, outer, -1);
    links.emplace_back(outer, next, -1);
    links.emplace_back(i, inner, -1);
    links.emplace_back(inner, next, -1);
  }
  return PlanarGraph::build(std::move(pts), links);
}

}  // namespace fixtures
