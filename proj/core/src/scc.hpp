#pragma once

#include <vector>

#include "neutralize/graph.hpp"

namespace neutralize::detail {

struct Condensation {
  // component[v] is the index of v's strongly connected component.
  std::vector<std::size_t> component;
  // Components in topological order: every edge of the view goes from a
  // component to itself or to a later one.
  std::vector<std::vector<VertexId>> members;
};

/// Tarjan's algorithm (iterative) over the edges of `view`.
Condensation condense(const SubgraphView& view);

}  // namespace neutralize::detail
