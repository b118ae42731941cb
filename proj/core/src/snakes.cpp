#include "neutralize/snakes.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace neutralize {

namespace {

// Kahn's algorithm on the zero-weight subgraph; returns each vertex's zero in-degree.
std::vector<std::size_t> zero_in_degrees_checked(const Graph& g) {
  SubgraphView zero(g, EdgeFilter::Zero);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  for (EdgeId e : zero.edge_ids()) ++indeg[g.dst(e)];

  std::vector<std::size_t> remaining = indeg;
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (remaining[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    VertexId u = ready.back();
    ready.pop_back();
    ++visited;
    for (EdgeId e : zero.out_edges(u)) {
      if (--remaining[g.dst(e)] == 0) ready.push_back(g.dst(e));
    }
  }
  if (visited != n) throw ZeroCycleError("zero-weight subgraph contains a cycle");
  return indeg;
}

}  // namespace

std::optional<std::size_t> min_snake_length(const Graph& g) {
  if (g.negative_edge_count() == 0) return std::nullopt;
  const auto indeg = zero_in_degrees_checked(g);

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> tail_len(g.vertex_count(), kInf);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (indeg[v] == 0) {
      tail_len[v] = 0;
      queue.push_back(v);
    }
  }
  SubgraphView zero(g, EdgeFilter::Zero);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId e : zero.out_edges(u)) {
      VertexId v = g.dst(e);
      if (tail_len[v] == kInf) {
        tail_len[v] = tail_len[u] + 1;
        queue.push_back(v);
      }
    }
  }

  std::size_t best = kInf;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.weight(e) < 0) best = std::min(best, tail_len[g.src(e)] + 1);
  }
  return best;
}

SnakeEnumeration enumerate_snakes(const Graph& g, std::size_t limit) {
  const auto indeg = zero_in_degrees_checked(g);
  SubgraphView zero(g, EdgeFilter::Zero);
  SnakeEnumeration out;

  // Depth-first search backwards over zero edges; `reversed_tail` holds the
  // tail from the head's source back to the current vertex.
  std::vector<EdgeId> reversed_tail;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (EdgeId head = 0; head < g.edge_count(); ++head) {
    if (g.weight(head) >= 0) continue;
    std::vector<Frame> stack{{g.src(head), 0}};
    reversed_tail.clear();
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == 0 && indeg[f.v] == 0) {
        if (out.snakes.size() == limit) {
          out.truncated = true;
          return out;
        }
        Snake s;
        s.tail.assign(reversed_tail.rbegin(), reversed_tail.rend());
        s.head = head;
        out.snakes.push_back(std::move(s));
      }
      auto in = g.in_edges(f.v);
      while (f.next < in.size() && !zero.contains(in[f.next])) ++f.next;
      if (f.next < in.size()) {
        EdgeId e = in[f.next++];
        reversed_tail.push_back(e);
        stack.push_back({g.src(e), 0});
      } else {
        stack.pop_back();
        if (!reversed_tail.empty() && !stack.empty()) reversed_tail.pop_back();
      }
    }
  }
  return out;
}

}  // namespace neutralize
