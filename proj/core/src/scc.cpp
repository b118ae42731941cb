#include "scc.hpp"

#include <algorithm>
#include <limits>

namespace neutralize::detail {

Condensation condense(const SubgraphView& view) {
  const Graph& g = view.parent();
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::size_t counter = 0;

  Condensation result;
  result.component.assign(n, kUnvisited);

  struct Frame {
    VertexId v;
    std::size_t next;  // position in g.out_edges(v)
  };
  std::vector<Frame> dfs;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    dfs.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!dfs.empty()) {
      Frame& f = dfs.back();
      auto out = g.out_edges(f.v);
      if (f.next < out.size()) {
        EdgeId e = out[f.next++];
        if (!view.contains(e)) continue;
        VertexId w = g.dst(e);
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          dfs.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      dfs.pop_back();
      if (!dfs.empty()) low[dfs.back().v] = std::min(low[dfs.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> members;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        result.members.push_back(std::move(members));
      }
    }
  }

  // Tarjan emits components in reverse topological order.
  std::reverse(result.members.begin(), result.members.end());
  for (std::size_t c = 0; c < result.members.size(); ++c) {
    for (VertexId v : result.members[c]) result.component[v] = c;
  }
  return result;
}

}  // namespace neutralize::detail
