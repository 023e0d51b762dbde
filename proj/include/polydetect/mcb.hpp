#pragma once

#include <cstdint>
#include <vector>

#include "polydetect/errors.hpp"
#include "polydetect/graph.hpp"

namespace polydetect {

/// Dense bit vector over GF(2); one bit per graph edge.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  int lowest_set_bit() const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64) + __builtin_ctzll(words_[k]);
    return -1;
  }
  void xor_with(const BitVector& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  }
  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.bits_ == b.bits_ && a.words_ == b.words_;
  }
  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(bits_);
    for (std::uint64_t w : words_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
    return h;
  }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Cycle {
  std::vector<EdgeId> edges;  // ascending
  BitVector incidence;        // length = graph edge count
  double weight = 0.0;        // sum of edge weights under the active metric
};

struct CandidateSet {
  std::vector<Cycle> cycles;
  std::vector<std::pair<VertexId, EdgeId>> provenance;  // generating (v, edge) per cycle
};

struct CycleBasis {
  std::vector<Cycle> cycles;  // ascending weight
  double total_weight = 0.0;
};

/// Candidate cycles SP(v,x) + (x,y) + SP(y,v) for every vertex v and edge
/// (x,y) whose two shortest paths meet only at v. Deduplicated by incidence
/// vector; weights follow the metric the APSP was computed with.
CandidateSet horton_candidates(const PlanarGraph& g, const ApspResult& apsp);

/// Ascending (weight, edge count, edge-id list) — total and deterministic.
std::vector<Cycle> order_by_length(const CandidateSet& cands);

/// Greedy GF(2) independence filter over the sorted candidates; keeps the
/// first nu independent cycles. Throws RankDeficiencyError when the
/// candidates span less than nu dimensions.
CycleBasis select_cycles(const std::vector<Cycle>& sorted, int nu);

CycleBasis minimum_cycle_basis(const PlanarGraph& g,
                               LengthMetric metric = LengthMetric::Euclidean);

}  // namespace polydetect
