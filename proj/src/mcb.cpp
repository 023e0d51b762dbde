#include "polydetect/mcb.hpp"

#include <algorithm>
#include <unordered_map>

namespace polydetect {

namespace {

std::vector<EdgeId> path_edges(const PlanarGraph& g, const std::vector<VertexId>& path) {
  std::vector<EdgeId> out;
  out.reserve(path.size());
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    const auto e = g.edge_between(path[k], path[k + 1]);
    if (!e) throw std::logic_error("shortest path uses a missing edge");
    out.push_back(*e);
  }
  return out;
}

}  // namespace

CandidateSet horton_candidates(const PlanarGraph& g, const ApspResult& apsp) {
  CandidateSet out;
  const int ecount = g.edge_count();
  std::vector<int> stamp(g.vertex_count(), -1);
  std::unordered_map<std::size_t, std::vector<size_t>> by_hash;
  int token = 0;

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e = 0; e < ecount; ++e) {
      const VertexId x = g.edge(e).u;
      const VertexId y = g.edge(e).v;
      if (v == x || v == y) continue;
      if (!apsp.reachable(v, x) || !apsp.reachable(v, y)) continue;

      const std::vector<VertexId> px = apsp.reconstruct_path(g, v, x);
      const std::vector<VertexId> py = apsp.reconstruct_path(g, v, y);
      ++token;
      for (VertexId w : px) stamp[w] = token;
      bool disjoint = true;
      for (VertexId w : py) {
        if (w != v && stamp[w] == token) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;

      Cycle c;
      c.edges = path_edges(g, px);
      const std::vector<EdgeId> back = path_edges(g, py);
      c.edges.insert(c.edges.end(), back.begin(), back.end());
      c.edges.push_back(e);
      std::sort(c.edges.begin(), c.edges.end());
      c.incidence = BitVector(ecount);
      for (EdgeId id : c.edges) {
        c.incidence.set(id);
        c.weight += edge_weight(g, id, apsp.metric());
      }

      bool duplicate = false;
      for (size_t prior : by_hash[c.incidence.hash()]) {
        if (out.cycles[prior].incidence == c.incidence) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      by_hash[c.incidence.hash()].push_back(out.cycles.size());
      out.cycles.push_back(std::move(c));
      out.provenance.emplace_back(v, e);
    }
  }
  return out;
}

std::vector<Cycle> order_by_length(const CandidateSet& cands) {
  std::vector<Cycle> sorted = cands.cycles;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Cycle& a, const Cycle& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return sorted;
}

CycleBasis select_cycles(const std::vector<Cycle>& sorted, int nu) {
  CycleBasis basis;
  if (nu == 0) return basis;

  const int bits = sorted.empty() ? 0 : sorted.front().incidence.size();
  std::vector<BitVector> pivots;
  std::vector<int> pivot_of_bit(bits, -1);

  for (const Cycle& c : sorted) {
    BitVector row = c.incidence;
    for (int b = row.lowest_set_bit(); b >= 0; b = row.lowest_set_bit()) {
      const int p = pivot_of_bit[b];
      if (p < 0) break;
      row.xor_with(pivots[p]);
    }
    const int b = row.lowest_set_bit();
    if (b < 0) continue;  // dependent on the rows already admitted
    pivot_of_bit[b] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
    basis.cycles.push_back(c);
    basis.total_weight += c.weight;
    if (static_cast<int>(basis.cycles.size()) == nu) return basis;
  }
  throw RankDeficiencyError("candidate cycles span fewer dimensions than the cycle space");
}

CycleBasis minimum_cycle_basis(const PlanarGraph& g, LengthMetric metric) {
  const int nu = cyclomatic_number(g);
  if (nu == 0) return {};
  const ApspResult apsp = all_pairs_shortest_paths(g, metric);
  return select_cycles(order_by_length(horton_candidates(g, apsp)), nu);
}

}  // namespace polydetect
