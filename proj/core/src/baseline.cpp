#include "neutralize/baseline.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace neutralize {

namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

void require_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw RangeError("source " + std::to_string(v) + " outside [0, " +
                     std::to_string(g.vertex_count()) + ")");
  }
}

// Walks `n` predecessor steps back from `start` to land on the cycle, then
// reads the cycle off the predecessor edges.
std::vector<EdgeId> extract_cycle(const Graph& g, const std::vector<EdgeId>& pred, VertexId start) {
  VertexId x = start;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) x = g.src(pred[x]);
  std::vector<EdgeId> cycle;
  VertexId v = x;
  do {
    EdgeId e = pred[v];
    cycle.push_back(e);
    v = g.src(e);
  } while (v != x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

void relax_to_fixpoint(const Graph& g, DistanceArray& dist) {
  const std::size_t n = g.vertex_count();
  std::vector<EdgeId> pred(n, kNoEdge);
  for (std::size_t pass = 1; pass <= n; ++pass) {
    bool changed = false;
    VertexId last = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& du = dist[g.src(e)];
      if (!du) continue;
      Weight candidate = checked_add(*du, g.weight(e));
      auto& dv = dist[g.dst(e)];
      if (!dv || candidate < *dv) {
        dv = candidate;
        pred[g.dst(e)] = e;
        changed = true;
        last = g.dst(e);
      }
    }
    if (!changed) return;
    if (pass == n) throw NegativeCycleError(extract_cycle(g, pred, last));
  }
}

}  // namespace

DistanceArray bellman_ford(const Graph& g, VertexId source) {
  require_vertex(g, source);
  DistanceArray dist(g.vertex_count());
  dist[source] = 0;
  relax_to_fixpoint(g, dist);
  return dist;
}

DistanceArray dijkstra(const Graph& g, VertexId source) {
  require_vertex(g, source);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.weight(e) < 0) {
      throw PreconditionError("dijkstra: edge " + std::to_string(e) + " has negative weight " +
                              std::to_string(g.weight(e)));
    }
  }
  DistanceArray dist(g.vertex_count());
  std::vector<bool> settled(g.vertex_count(), false);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0;
  queue.emplace(0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = true;
    for (EdgeId e : g.out_edges(u)) {
      VertexId v = g.dst(e);
      Weight candidate = checked_add(d, g.weight(e));
      if (!dist[v] || candidate < *dist[v]) {
        dist[v] = candidate;
        queue.emplace(candidate, v);
      }
    }
  }
  return dist;
}

Potential johnson_potential(const Graph& g) {
  DistanceArray dist(g.vertex_count(), Weight{0});
  relax_to_fixpoint(g, dist);
  Potential phi = Potential::zero(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) phi[v] = *dist[v];
  return phi;
}

}  // namespace neutralize
