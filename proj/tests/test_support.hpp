#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "neutralize/graph.hpp"
#include "neutralize/rng.hpp"
#include "neutralize/weight_seq.hpp"

namespace neutralize::testing {

inline Graph path_graph(std::initializer_list<Weight> weights) {
  return seq_to_path_graph(WeightSeq(weights));
}

/// Random DAG on n vertices with ids shuffled (so id order is not a
/// topological order). Each forward pair gets an edge with probability
/// `density_pct`%, weight uniform in [lo, hi].
inline Graph random_dag(Rng& rng, std::size_t n, int density_pct, Weight lo, Weight hi) {
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(label[i - 1], label[static_cast<std::size_t>(rng.uniform(0, Weight(i - 1)))]);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform(1, 100) <= density_pct) {
        edges.push_back({label[i], label[j], rng.uniform(lo, hi)});
      }
    }
  }
  return Graph(n, edges);
}

inline Potential random_potential(Rng& rng, std::size_t n, Weight range) {
  Potential p = Potential::zero(n);
  for (auto& v : p.values) v = rng.uniform(-range, range);
  return p;
}

inline WeightSeq random_seq(Rng& rng, std::size_t len, Weight lo, Weight hi) {
  std::vector<Weight> w(len);
  for (auto& x : w) x = rng.uniform(lo, hi);
  return WeightSeq(std::move(w));
}

/// Distance arrays are compared as optional values.
template <typename A, typename B>
bool same_distances(const A& a, const B& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].has_value() != b[i].has_value()) return false;
    if (a[i] && *a[i] != *b[i]) return false;
  }
  return true;
}

}  // namespace neutralize::testing
