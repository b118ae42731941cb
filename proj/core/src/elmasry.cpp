#include "neutralize/elmasry.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <utility>

#include "neutralize/snakes.hpp"
#include "scc.hpp"

namespace neutralize {

namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

// Shortest (edge count) path from `from` to `to` using only edges of `view`
// whose endpoints both lie in component `comp`.
std::vector<EdgeId> path_within_component(const SubgraphView& view,
                                          const detail::Condensation& cond, std::size_t comp,
                                          VertexId from, VertexId to) {
  const Graph& g = view.parent();
  std::vector<EdgeId> pred(g.vertex_count(), kNoEdge);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId e : view.out_edges(u)) {
      VertexId v = g.dst(e);
      if (seen[v] || cond.component[v] != comp) continue;
      seen[v] = true;
      pred[v] = e;
      queue.push_back(v);
    }
  }
  std::vector<EdgeId> path;
  for (VertexId v = to; v != from; v = g.src(pred[v])) path.push_back(pred[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

void check_no_negative_cycle(const SubgraphView& non_positive, const detail::Condensation& cond) {
  const Graph& g = non_positive.parent();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.weight(e) >= 0) continue;
    const std::size_t comp = cond.component[g.src(e)];
    if (comp != cond.component[g.dst(e)]) continue;
    std::vector<EdgeId> cycle{e};
    if (g.src(e) != g.dst(e)) {
      auto back = path_within_component(non_positive, cond, comp, g.dst(e), g.src(e));
      cycle.insert(cycle.end(), back.begin(), back.end());
    }
    throw NegativeCycleError(std::move(cycle));
  }
}

// Backward breadth-first search over tight edges of `view`, from `v` to the
// first vertex accepted by `is_start`. Returns the path in forward order and
// its first vertex.
template <typename Tight, typename IsStart>
std::pair<VertexId, std::vector<EdgeId>> tight_path_back(const SubgraphView& view, VertexId v,
                                                         Tight tight, IsStart is_start) {
  const Graph& g = view.parent();
  std::vector<EdgeId> succ(g.vertex_count(), kNoEdge);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (is_start(x)) {
      std::vector<EdgeId> path;
      for (VertexId y = x; y != v; y = g.dst(succ[y])) path.push_back(succ[y]);
      return {x, std::move(path)};
    }
    for (EdgeId e : view.in_edges(x)) {
      VertexId u = g.src(e);
      if (seen[u] || !tight(e)) continue;
      seen[u] = true;
      succ[u] = e;
      queue.push_back(u);
    }
  }
  throw PreconditionError("nbp_decomposition: potential is not realized by any path");
}

}  // namespace

EtaResult compute_eta(const Graph& g) {
  const std::size_t n = g.vertex_count();
  SubgraphView non_positive(g, EdgeFilter::NonPositive);
  const detail::Condensation cond = detail::condense(non_positive);
  check_no_negative_cycle(non_positive, cond);

  // Phase 1: topological propagation over the condensed non-positive subgraph.
  std::vector<Weight> comp_value(cond.members.size(), 0);
  for (std::size_t c = 0; c < cond.members.size(); ++c) {
    for (VertexId u : cond.members[c]) {
      for (EdgeId e : non_positive.out_edges(u)) {
        const std::size_t d = cond.component[g.dst(e)];
        if (d == c) continue;
        comp_value[d] = std::min(comp_value[d], checked_add(comp_value[c], g.weight(e)));
      }
    }
  }
  EtaResult result;
  result.eta_minus = Potential::zero(n);
  for (VertexId v = 0; v < n; ++v) result.eta_minus[v] = comp_value[cond.component[v]];

  // Phase 2: Dijkstra over non-negative edges, every vertex a source.
  SubgraphView non_negative(g, EdgeFilter::NonNegative);
  result.eta = result.eta_minus;
  std::vector<bool> settled(n, false);
  using Item = std::pair<Weight, VertexId>;
  std::vector<Item> seeds;
  seeds.reserve(n);
  for (VertexId v = 0; v < n; ++v) seeds.emplace_back(result.eta[v], v);
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue(std::greater<>{},
                                                                     std::move(seeds));
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (settled[u] || d != result.eta[u]) continue;
    settled[u] = true;
    for (EdgeId e : non_negative.out_edges(u)) {
      VertexId v = g.dst(e);
      if (settled[v]) continue;
      Weight candidate = checked_add(d, g.weight(e));
      if (candidate < result.eta[v]) {
        result.eta[v] = candidate;
        queue.emplace(candidate, v);
      }
    }
  }
  return result;
}

NbpDecomposition nbp_decomposition(const Graph& g, const EtaResult& eta, VertexId v) {
  if (v >= g.vertex_count()) throw RangeError("vertex " + std::to_string(v) + " out of range");
  const auto& em = eta.eta_minus;
  const auto& e2 = eta.eta;

  SubgraphView non_negative(g, EdgeFilter::NonNegative);
  auto [mid, suffix] = tight_path_back(
      non_negative, v,
      [&](EdgeId e) { return checked_add(e2[g.src(e)], g.weight(e)) == e2[g.dst(e)]; },
      [&](VertexId x) { return e2[x] == em[x]; });

  SubgraphView non_positive(g, EdgeFilter::NonPositive);
  auto [start, prefix] = tight_path_back(
      non_positive, mid,
      [&](EdgeId e) { return checked_add(em[g.src(e)], g.weight(e)) == em[g.dst(e)]; },
      [&](VertexId x) { return em[x] == 0; });
  (void)start;

  NbpDecomposition out;
  out.vertex = v;
  out.split = prefix.size();
  out.edges = std::move(prefix);
  out.edges.insert(out.edges.end(), suffix.begin(), suffix.end());
  return out;
}

std::size_t default_max_iters(const Graph& g) { return g.vertex_count() + 1; }

IterationTrace run_to_fixpoint(const Graph& g, const RunOptions& options) {
  return run_to_fixpoint(g, options, compute_eta);
}

IterationTrace run_to_fixpoint(const Graph& g, const RunOptions& options,
                               const EtaFunction& eta_fn) {
  const std::size_t max_iters = options.max_iters.value_or(default_max_iters(g));
  if (max_iters < 1) throw PreconditionError("max_iters must be at least 1");

  IterationTrace trace;
  trace.accumulated_potential = Potential::zero(g.vertex_count());
  Graph current = g;
  std::size_t negatives = current.negative_edge_count();
  while (negatives > 0) {
    if (trace.iterations_executed == max_iters) {
      throw IterationLimitError(max_iters, negatives);
    }
    EtaResult eta = eta_fn(current);
    current = reduce_weights(current, eta.eta);
    negatives = current.negative_edge_count();
    trace.accumulated_potential = trace.accumulated_potential + eta.eta;
    ++trace.iterations_executed;

    IterationRecord record;
    record.index = trace.iterations_executed;
    record.eta = std::move(eta.eta);
    record.negative_edge_count_after = negatives;
    if (options.snake_stats && negatives > 0) {
      try {
        record.min_snake_length_after = min_snake_length(current);
      } catch (const ZeroCycleError&) {
        record.min_snake_length_after.reset();
      }
    }
    if (options.record_reduced_weights) {
      record.reduced_weights.assign(current.weights().begin(), current.weights().end());
    }
    trace.iterations.push_back(std::move(record));
  }
  return trace;
}

DistanceArray sssp(const Graph& g, VertexId source, const RunOptions& options) {
  if (source >= g.vertex_count()) {
    throw RangeError("source " + std::to_string(source) + " outside [0, " +
                     std::to_string(g.vertex_count()) + ")");
  }
  RunOptions run_options = options;
  run_options.snake_stats = false;
  run_options.record_reduced_weights = false;
  const Potential phi = run_to_fixpoint(g, run_options).accumulated_potential;
  DistanceArray dist = dijkstra(reduce_weights(g, phi), source);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dist[v]) dist[v] = checked_add(checked_sub(*dist[v], phi[source]), phi[v]);
  }
  return dist;
}

}  // namespace neutralize
