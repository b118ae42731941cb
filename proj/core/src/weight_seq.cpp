#include "neutralize/weight_seq.hpp"

#include <string>

namespace neutralize {

namespace {

int sign(Weight w) { return (w > 0) - (w < 0); }

}  // namespace

WeightSeq contract_sequence(const WeightSeq& p) {
  WeightSeq out;
  for (Weight w : p.weights) {
    if (w == 0) continue;
    if (!out.weights.empty() && sign(out.weights.back()) == sign(w)) {
      out.weights.back() = checked_add(out.weights.back(), w);
    } else {
      out.weights.push_back(w);
    }
  }
  return out;
}

std::size_t count_negative(const WeightSeq& p) {
  std::size_t count = 0;
  for (Weight w : p.weights) count += w < 0;
  return count;
}

NegSegmentAnalysis analyze_neg_segments(const WeightSeq& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool odd_position = i % 2 == 0;  // 1-based position i+1
    if (odd_position ? p[i] >= 0 : p[i] <= 0) {
      throw PreconditionError("analyze_neg_segments: position " + std::to_string(i + 1) +
                              " has weight " + std::to_string(p[i]) +
                              "; expected negative at odd and positive at even positions");
    }
  }

  NegSegmentAnalysis result;
  std::vector<Weight> w = p.weights;
  if (w.size() % 2 == 1) {
    w.push_back(1);
    result.sentinel_appended = true;
  }

  std::size_t first = 1;
  for (std::size_t i = 1; i < w.size(); i += 2) {
    if (checked_add(w[i - 1], w[i]) > 0) {
      result.terminals.push_back(i);
      result.segments.push_back({first, i + 1, false});
      first = i + 2;
    }
  }
  if (first <= w.size()) {
    result.segments.push_back({first, w.size(), true});
    result.has_open_segment = true;
  }
  return result;
}

Graph seq_to_path_graph(const WeightSeq& p) {
  std::vector<Edge> edges;
  edges.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) edges.push_back({i, i + 1, p[i]});
  return Graph(p.size() + 1, edges);
}

WeightSeq path_graph_to_seq(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw ShapeError("path graph needs at least one vertex");
  if (g.edge_count() != n - 1) {
    throw ShapeError("path on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                     " edges, got " + std::to_string(g.edge_count()));
  }
  std::vector<Weight> w(n - 1);
  std::vector<bool> seen(n - 1, false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId u = g.src(e);
    if (g.dst(e) != u + 1 || seen[u]) {
      throw ShapeError("edge " + std::to_string(e) + " (" + std::to_string(u) + " -> " +
                       std::to_string(g.dst(e)) + ") is not a path step");
    }
    seen[u] = true;
    w[u] = g.weight(e);
  }
  return WeightSeq(std::move(w));
}

}  // namespace neutralize
