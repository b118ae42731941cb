#pragma once

#include <optional>
#include <vector>

#include "neutralize/graph.hpp"

namespace neutralize {

/// A shortest-path distance; std::nullopt means unreachable.
using Distance = std::optional<Weight>;
using DistanceArray = std::vector<Distance>;

/// Exact single-source distances with arbitrary weights. Stops early once a
/// pass relaxes nothing. Throws NegativeCycleError (with witness) if a
/// negative cycle is reachable from `source`.
DistanceArray bellman_ford(const Graph& g, VertexId source);

/// Single-source Dijkstra. Throws PreconditionError if any weight is negative.
DistanceArray dijkstra(const Graph& g, VertexId source);

/// δ(V, v) for every v: Bellman-Ford from a virtual super-source joined to
/// every vertex by a zero-weight edge. The super-source is never added to the
/// graph. Throws NegativeCycleError on any negative cycle.
Potential johnson_potential(const Graph& g);

}  // namespace neutralize
