#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "neutralize/graph.hpp"

namespace neutralize {

/// An inclusion-maximal run of zero-weight edges followed by one strictly
/// negative edge (the head). Length is counted in edges.
struct Snake {
  std::vector<EdgeId> tail;
  EdgeId head = 0;

  std::size_t length() const noexcept { return tail.size() + 1; }
  friend bool operator==(const Snake&, const Snake&) = default;
};

/// Shortest snake in `g`, or std::nullopt if there is no negative edge.
///
/// Runs in O(n + m): a breadth-first search over zero-weight edges started
/// from every vertex without an incoming zero-weight edge gives, for each
/// vertex, the shortest inclusion-maximal zero path ending there.
/// Throws ZeroCycleError if the zero-weight subgraph has a cycle.
std::optional<std::size_t> min_snake_length(const Graph& g);

struct SnakeEnumeration {
  std::vector<Snake> snakes;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultSnakeLimit = 1'000'000;

/// Every snake, grouped by head in edge order. Can be exponential on zero-weight
/// DAGs with many converging chains; stops with `truncated` set after `limit`.
/// Throws ZeroCycleError.
SnakeEnumeration enumerate_snakes(const Graph& g, std::size_t limit = kDefaultSnakeLimit);

}  // namespace neutralize
