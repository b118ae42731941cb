#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "neutralize/baseline.hpp"
#include "neutralize/graph.hpp"

namespace neutralize {

/// Per-iteration potential in its two stages.
///
/// `eta_minus` is the propagation over non-positive edges only (zero-weight
/// strongly connected pieces share one value); `eta` continues it through
/// non-negative edges. Pointwise eta <= eta_minus <= 0.
struct EtaResult {
  Potential eta_minus;
  Potential eta;
};

/// η(v) = minimum length of a path ending at v on which every negative edge
/// precedes every positive edge (the empty path included).
///
/// Phase 1 condenses the non-positive subgraph into strongly connected
/// components and relaxes it in topological order. Phase 2 is a multi-source
/// Dijkstra over non-negative edges seeded with every vertex at its phase-1
/// value; ties are popped by smaller vertex id.
///
/// Throws NegativeCycleError if a component of the non-positive subgraph
/// contains a strictly negative edge. Cycles mixing signs are not detected
/// here.
EtaResult compute_eta(const Graph& g);

/// A path realizing η(v): `edges[0, split)` all have weight <= 0, the rest
/// weight >= 0, and the total equals η(v). Empty when η(v) = 0 is realized by
/// the empty path.
struct NbpDecomposition {
  VertexId vertex = 0;
  std::vector<EdgeId> edges;
  std::size_t split = 0;
};

NbpDecomposition nbp_decomposition(const Graph& g, const EtaResult& eta, VertexId v);

struct RunOptions {
  /// Defaults to vertex_count + 1.
  std::optional<std::size_t> max_iters;
  bool record_reduced_weights = false;
  /// Compute the minimum snake length after every iteration.
  bool snake_stats = true;
};

struct IterationRecord {
  std::size_t index = 0;  // 1-based
  Potential eta;
  std::size_t negative_edge_count_after = 0;
  /// Empty when no negative edge remains, or when snake stats are disabled or
  /// undefined because the zero-weight subgraph has a cycle.
  std::optional<std::size_t> min_snake_length_after;
  /// Only filled when RunOptions::record_reduced_weights is set.
  std::vector<Weight> reduced_weights;
};

struct IterationTrace {
  std::vector<IterationRecord> iterations;
  Potential accumulated_potential;
  std::size_t iterations_executed = 0;
};

std::size_t default_max_iters(const Graph& g);

/// Hook used to substitute the per-iteration potential (tests and diagnostics).
using EtaFunction = std::function<EtaResult(const Graph&)>;

/// Applies η and reweights while a strictly negative edge remains.
///
/// An iteration is only started on a graph with at least one negative edge, so
/// a non-negative input yields zero iterations. On return the accumulated
/// potential neutralizes `g`.
///
/// Throws NegativeCycleError (from compute_eta), IterationLimitError when
/// `max_iters` iterations leave negative edges behind, and OverflowError.
IterationTrace run_to_fixpoint(const Graph& g, const RunOptions& options = {});
IterationTrace run_to_fixpoint(const Graph& g, const RunOptions& options, const EtaFunction& eta);

/// Shortest-path distances from `source`: neutralize with run_to_fixpoint,
/// Dijkstra on the reduced weights, then undo the potential shift.
DistanceArray sssp(const Graph& g, VertexId source, const RunOptions& options = {});

/// JSON with fields iterations[{index, eta, negEdges, minSnakeLen}],
/// accumulatedPotential and iterationsExecuted. minSnakeLen is null when
/// undefined. reducedWeights is added per iteration when recorded.
std::string trace_to_json(const IterationTrace& trace);

}  // namespace neutralize
