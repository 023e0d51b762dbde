#include "polydetect/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace polydetect {

namespace {

// Shared mutable state for the status comparator. `sweep` is the event point
// being processed; it only ever advances in (x, y) order.
struct SweepState {
  const std::vector<Segment>* segs = nullptr;  // normalized: a is the lex-smaller endpoint
  Point sweep{};
  double eps = 0.0;

  bool contains(int i, const Point& p) const {
    return point_segment_distance(p, (*segs)[i]) <= eps;
  }

  // y of segment i on the vertical line through p, clamped into the segment's
  // own range so near-vertical segments stay bounded.
  double key_at(int i, const Point& p) const {
    const Segment& s = (*segs)[i];
    const double dx = s.b.x - s.a.x;
    if (dx <= eps) {
      const double lo = std::min(s.a.y, s.b.y);
      const double hi = std::max(s.a.y, s.b.y);
      return std::clamp(p.y, lo, hi);
    }
    const double t = std::clamp((p.x - s.a.x) / dx, 0.0, 1.0);
    return s.a.y + t * (s.b.y - s.a.y);
  }

  // Order of segments just after a common point: ascending slope, verticals
  // last (they continue straight up in (x, y) order).
  double slope_rank(int i) const {
    const Segment& s = (*segs)[i];
    const double dx = s.b.x - s.a.x;
    if (dx <= eps) return std::numeric_limits<double>::infinity();
    return (s.b.y - s.a.y) / dx;
  }

  bool seg_less(int i, int j) const {
    if (i == j) return false;
    const bool ci = contains(i, sweep);
    const bool cj = contains(j, sweep);
    if (ci && cj) {
      const double si = slope_rank(i);
      const double sj = slope_rank(j);
      if (si != sj) return si < sj;
      return i < j;
    }
    const double ki = ci ? sweep.y : key_at(i, sweep);
    const double kj = cj ? sweep.y : key_at(j, sweep);
    if (ki != kj) return ki < kj;
    const double si = slope_rank(i);
    const double sj = slope_rank(j);
    if (si != sj) return si < sj;
    return i < j;
  }
};

struct StatusCmp {
  SweepState* st = nullptr;
  using is_transparent = void;
  bool operator()(int i, int j) const { return st->seg_less(i, j); }
  bool operator()(int i, const Point& p) const {
    if (st->contains(i, p)) return false;
    return st->key_at(i, p) < p.y;
  }
  bool operator()(const Point& p, int j) const {
    if (st->contains(j, p)) return false;
    return p.y < st->key_at(j, p);
  }
};

struct EventPointLess {
  double eps = 0.0;
  bool operator()(const Point& a, const Point& b) const {
    if (a.x < b.x - eps) return true;
    if (b.x < a.x - eps) return false;
    return a.y < b.y - eps;
  }
};

struct EventRec {
  std::vector<int> starts;
  std::vector<int> ends;
};

class Sweep {
 public:
  Sweep(const SegmentSet& input, const Tolerance& tol)
      : input_(&input), tol_(tol), ev_less_{tol.eps}, queue_(ev_less_) {
    norm_.reserve(input.segments.size());
    for (const Segment& s : input.segments) {
      norm_.push_back(lex_less(s.a, s.b) ? s : Segment{s.b, s.a});
    }
    state_.segs = &norm_;
    state_.eps = tol.eps;
  }

  IntersectionReport run() {
    std::set<int, StatusCmp> status{StatusCmp{&state_}};
    for (int i = 0; i < static_cast<int>(norm_.size()); ++i) {
      queue_[norm_[i].a].starts.push_back(i);
      queue_[norm_[i].b].ends.push_back(i);
    }

    while (!queue_.empty()) {
      auto node = queue_.extract(queue_.begin());
      const Point p = node.key();
      const EventRec rec = std::move(node.mapped());

      // Everything through p leaves the status and re-enters below in the
      // post-p order; removing by iterator keeps the comparator honest.
      auto range = status.equal_range(p);
      std::vector<int> through(range.first, range.second);
      status.erase(range.first, range.second);
      for (int e : rec.ends) {
        if (std::find(through.begin(), through.end(), e) != through.end()) continue;
        for (auto it = status.begin(); it != status.end(); ++it) {
          if (*it == e) {  // comparator drift; recover by linear scan
            status.erase(it);
            through.push_back(e);
            break;
          }
        }
      }

      state_.sweep = p;

      std::vector<int> group = through;
      group.insert(group.end(), rec.starts.begin(), rec.starts.end());
      std::sort(group.begin(), group.end());
      group.erase(std::unique(group.begin(), group.end()), group.end());
      for (size_t a = 0; a < group.size(); ++a)
        for (size_t b = a + 1; b < group.size(); ++b) classify(group[a], group[b], p);

      std::vector<int> reinsert = rec.starts;
      for (int t : through) {
        if (std::find(rec.ends.begin(), rec.ends.end(), t) == rec.ends.end())
          reinsert.push_back(t);
      }
      for (int t : reinsert) status.insert(t);

      // New adjacencies around the touched range.
      auto after = status.equal_range(p);
      if (after.first == after.second) {
        if (after.first != status.begin() && after.first != status.end())
          classify(*std::prev(after.first), *after.first, p);
      } else {
        if (after.first != status.begin()) classify(*std::prev(after.first), *after.first, p);
        if (after.second != status.end()) classify(*std::prev(after.second), *after.second, p);
      }
    }

    return aggregate();
  }

 private:
  void classify(int i, int j, const Point& at) {
    if (i > j) std::swap(i, j);
    if (i == j) return;
    if (!seen_.insert({i, j}).second) return;
    const IntersectionResult r =
        intersect_segments(input_->segments[i], input_->segments[j], tol_);
    if (r.kind == IntersectionKind::CollinearOverlap)
      throw OverlapError(static_cast<size_t>(i), static_cast<size_t>(j));
    if (r.kind == IntersectionKind::ProperPoint) {
      hits_.push_back({*r.point, i, j});
      if (ev_less_(at, *r.point)) queue_.try_emplace(*r.point);
    }
  }

  IntersectionReport aggregate() const {
    std::vector<Point> pts;
    pts.reserve(hits_.size());
    for (const Hit& h : hits_) pts.push_back(h.point);
    std::vector<Point> reps;
    const std::vector<VertexId> ids = canonicalize(pts, tol_, &reps);

    std::vector<std::vector<int>> per_rep(reps.size());
    for (size_t k = 0; k < hits_.size(); ++k) {
      per_rep[ids[k]].push_back(hits_[k].first);
      per_rep[ids[k]].push_back(hits_[k].second);
    }

    IntersectionReport report;
    report.events.reserve(reps.size());
    for (size_t r = 0; r < reps.size(); ++r) {  // reps are already (x, y) sorted
      std::vector<int>& segs = per_rep[r];
      std::sort(segs.begin(), segs.end());
      segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
      report.events.push_back({reps[r], std::move(segs)});
    }
    return report;
  }

  struct Hit {
    Point point;
    int first;
    int second;
  };

  const SegmentSet* input_;
  Tolerance tol_;
  EventPointLess ev_less_;
  std::vector<Segment> norm_;
  SweepState state_;
  std::map<Point, EventRec, EventPointLess> queue_;
  std::set<std::pair<int, int>> seen_;
  std::vector<Hit> hits_;
};

}  // namespace

std::vector<ValidationIssue> validate_segment_set(const SegmentSet& s, const Tolerance& tol) {
  std::vector<ValidationIssue> issues;
  for (size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (!std::isfinite(seg.a.x) || !std::isfinite(seg.a.y) || !std::isfinite(seg.b.x) ||
        !std::isfinite(seg.b.y)) {
      issues.push_back({i, "non-finite coordinate"});
    } else if (same_point(seg.a, seg.b, tol)) {
      issues.push_back({i, "zero-length segment"});
    }
  }
  return issues;
}

IntersectionReport find_intersections(const SegmentSet& s, const Tolerance& tol) {
  std::vector<ValidationIssue> issues = validate_segment_set(s, tol);
  if (!issues.empty()) throw ValidationError("invalid segment set", std::move(issues));
  return Sweep(s, tol).run();
}

PlanarGraph build_induced_graph(const SegmentSet& s, const IntersectionReport& report,
                                const Tolerance& tol) {
  const int n = s.count();
  std::vector<Point> pts;
  pts.reserve(2 * static_cast<size_t>(n) + report.events.size());
  for (const Segment& seg : s.segments) {
    pts.push_back(seg.a);
    pts.push_back(seg.b);
  }
  for (const IntersectionEvent& ev : report.events) pts.push_back(ev.point);

  std::vector<Point> reps;
  const std::vector<VertexId> ids = canonicalize(pts, tol, &reps);

  std::vector<std::vector<VertexId>> cuts(n);
  for (int i = 0; i < n; ++i) cuts[i] = {ids[2 * i], ids[2 * i + 1]};
  for (size_t k = 0; k < report.events.size(); ++k) {
    const VertexId id = ids[2 * static_cast<size_t>(n) + k];
    for (int seg : report.events[k].segments) cuts[seg].push_back(id);
  }

  std::vector<std::tuple<VertexId, VertexId, int>> links;
  for (int i = 0; i < n; ++i) {
    const Point a = reps[ids[2 * i]];
    const Point b = reps[ids[2 * i + 1]];
    auto param = [&](VertexId v) {
      return (reps[v].x - a.x) * (b.x - a.x) + (reps[v].y - a.y) * (b.y - a.y);
    };
    std::sort(cuts[i].begin(), cuts[i].end(), [&](VertexId u, VertexId v) {
      const double tu = param(u);
      const double tv = param(v);
      return tu != tv ? tu < tv : u < v;
    });
    cuts[i].erase(std::unique(cuts[i].begin(), cuts[i].end()), cuts[i].end());
    for (size_t k = 0; k + 1 < cuts[i].size(); ++k) {
      const VertexId u = std::min(cuts[i][k], cuts[i][k + 1]);
      const VertexId v = std::max(cuts[i][k], cuts[i][k + 1]);
      if (u != v) links.emplace_back(u, v, i);
    }
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end(),
                          [](const auto& x, const auto& y) {
                            return std::get<0>(x) == std::get<0>(y) &&
                                   std::get<1>(x) == std::get<1>(y);
                          }),
              links.end());

  return PlanarGraph::build(std::move(reps), links);
}

PlanarGraph compute_induced_graph(const SegmentSet& s, const Tolerance& tol) {
  return build_induced_graph(s, find_intersections(s, tol), tol);
}

}  // namespace polydetect
