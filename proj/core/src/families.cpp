#include "neutralize/families.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "neutralize/rng.hpp"

namespace neutralize {

namespace {

void require_gn_range(unsigned n) {
  if (n < 1 || n > kMaxGn) {
    throw RangeError("G_n parameter " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxGn) + "]");
  }
}

// Edge list of G_n for n >= 0 (G_0 has no edges).
std::vector<Edge> gn_edges(unsigned n) {
  const GnLayout L{n};
  std::vector<Edge> edges;
  edges.reserve(L.edge_count());
  for (unsigned i = 0; i < n; ++i) {
    const Weight big = checked_pow3(n - i);
    const Weight small = checked_pow3(n - i - 1);
    const std::size_t a = 2 * std::size_t{i};
    edges.push_back({L.x(a), L.x(a + 1), checked_mul(-2, big)});
    edges.push_back({L.x(a + 1), L.x(a + 2), checked_mul(2, small)});
    edges.push_back({L.y(a), L.y(a + 1), -big});
    edges.push_back({L.y(a + 1), L.y(a + 2), 0});
    edges.push_back({L.x(a + 1), L.y(a + 2), small});
    edges.push_back({L.y(a + 1), L.x(a + 2), 0});
  }
  return edges;
}

// (a − b) / 2 with a − b even.
Weight half_difference(Weight a, Weight b) { return checked_sub(a, b) / 2; }

}  // namespace

std::string GnLayout::name(VertexId v) const {
  const std::size_t half = 2 * std::size_t{n} + 1;
  if (v < half) return "x_" + std::to_string(v);
  if (v < 2 * half) return "y_" + std::to_string(v - half);
  return "v" + std::to_string(v);
}

GnInstance gen_gn(unsigned n) {
  require_gn_range(n);
  const GnLayout layout{n};
  return GnInstance{Graph(layout.vertex_count(), gn_edges(n)), layout};
}

GnEta gn_closed_form_eta(unsigned n) {
  require_gn_range(n);
  const GnLayout L{n};
  const Weight top = checked_pow3(n + 1);
  GnEta out;
  out.eta_minus = Potential::zero(L.vertex_count());
  auto& em = out.eta_minus;

  // η⁻(x_0) = η⁻(y_0) = 0 and η⁻(x_1) = −2·3^n.
  em[L.x(1)] = checked_mul(-2, checked_pow3(n));
  for (unsigned i = 0; i < n; ++i) {
    const Weight v = half_difference(checked_pow3(n - i), top);
    em[L.y(2 * i + 1)] = v;
    em[L.y(2 * i + 2)] = v;
  }
  for (unsigned i = 1; i <= n; ++i) {
    const Weight v = half_difference(checked_pow3(n - i + 1), top);
    em[L.x(2 * i)] = v;
    em[L.y(2 * i)] = v;
  }
  for (unsigned i = 1; i < n; ++i) {
    em[L.x(2 * i + 1)] = half_difference(-checked_pow3(n - i), top);
  }

  // Phase 2 only lowers the even-indexed vertices x_{2i}, y_{2i}, 1 <= i <= n.
  out.eta = out.eta_minus;
  for (unsigned i = 1; i <= n; ++i) {
    out.eta[L.x(2 * i)] = half_difference(checked_pow3(n - i), top);
    out.eta[L.y(2 * i)] = half_difference(-checked_pow3(n - i), top);
  }
  return out;
}

Graph gn_closed_form_reduced(unsigned n) {
  require_gn_range(n);
  const GnLayout L{n};
  std::vector<Edge> edges = gn_edges(n);
  // Block 0: the edges leaving x_0, y_0 and x_1 become 0; the two edges
  // leaving y_1 take the same values as in the later blocks.
  for (unsigned i = 0; i < n; ++i) {
    const Weight big = checked_pow3(n - i);
    const Weight small = checked_pow3(n - i - 1);
    Edge* block = &edges[6 * std::size_t{i}];
    if (i == 0) {
      block[0].weight = 0;
      block[1].weight = 0;
      block[2].weight = 0;
      block[3].weight = checked_mul(2, small);
      block[4].weight = 0;
      block[5].weight = small;
    } else {
      // The x and y rows trade weights.
      block[0].weight = -big;
      block[1].weight = 0;
      block[2].weight = checked_mul(-2, big);
      block[3].weight = checked_mul(2, small);
      block[4].weight = 0;
      block[5].weight = small;
    }
  }
  return Graph(L.vertex_count(), edges);
}

std::optional<std::string> gn_self_similarity_mismatch(const Graph& reduced, unsigned n) {
  require_gn_range(n);
  const GnLayout L{n};
  if (reduced.vertex_count() != L.vertex_count()) {
    return "reduced graph has " + std::to_string(reduced.vertex_count()) + " vertices, expected " +
           std::to_string(L.vertex_count());
  }
  const GnLayout smaller{n - 1};
  const std::size_t half = 2 * std::size_t{n} + 1;
  // x_j ↦ y'_{j−2}, y_j ↦ x'_{j−2}; vertices with index < 2 have no image.
  auto relabel = [&](VertexId v) -> std::optional<VertexId> {
    const bool is_x = v < half;
    const std::size_t j = is_x ? v : v - half;
    if (j < 2) return std::nullopt;
    return is_x ? smaller.y(j - 2) : smaller.x(j - 2);
  };

  auto key = [](const Edge& e) { return std::tuple(e.src, e.dst, e.weight); };
  std::vector<Edge> induced;
  for (const Edge& e : reduced.edges()) {
    auto s = relabel(e.src);
    auto d = relabel(e.dst);
    if (s && d) induced.push_back({*s, *d, e.weight});
  }
  std::vector<Edge> expected = gn_edges(n - 1);
  auto by_key = [&](const Edge& a, const Edge& b) { return key(a) < key(b); };
  std::sort(induced.begin(), induced.end(), by_key);
  std::sort(expected.begin(), expected.end(), by_key);

  const std::size_t common = std::min(induced.size(), expected.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (!(induced[k] == expected[k])) {
      return "self-similarity: induced edge " + smaller.name(induced[k].src) + " -> " +
             smaller.name(induced[k].dst) + " (" + std::to_string(induced[k].weight) +
             ") vs G_" + std::to_string(n - 1) + " edge " + smaller.name(expected[k].src) +
             " -> " + smaller.name(expected[k].dst) + " (" + std::to_string(expected[k].weight) +
             ")";
    }
  }
  if (induced.size() != expected.size()) {
    return "self-similarity: induced subgraph has " + std::to_string(induced.size()) +
           " edges, G_" + std::to_string(n - 1) + " has " + std::to_string(expected.size());
  }
  return std::nullopt;
}

WeightSeq gen_hard_path(unsigned s) {
  if (s < 1 || s > 30) throw RangeError("hard path level " + std::to_string(s) + " outside [1, 30]");
  std::vector<Weight> p{-1, 1};
  for (unsigned level = 1; level < s; ++level) {
    std::vector<Weight> q;
    q.reserve(2 * p.size());
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
      q.push_back(checked_sub(p[i], 1));
      q.push_back(1);
      q.push_back(-1);
      q.push_back(checked_add(p[i + 1], 1));
    }
    p = std::move(q);
  }
  return WeightSeq(std::move(p));
}

WeightSeq gen_alternating_path(std::size_t k) {
  if (k == 0) throw PreconditionError("alternating path needs k >= 1");
  std::vector<Weight> p;
  p.reserve(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    p.push_back(-1);
    p.push_back(1);
  }
  return WeightSeq(std::move(p));
}

Graph gen_random_graph(std::size_t n, std::size_t m, Weight max_weight, std::uint64_t seed,
                       std::optional<Weight> potential_range) {
  if (n == 0) throw RangeError("random graph needs n >= 1");
  if (m > n * (n - 1)) {
    throw RangeError("cannot place " + std::to_string(m) + " distinct non-loop edges on " +
                     std::to_string(n) + " vertices");
  }
  if (max_weight < 0) throw RangeError("max_weight must be non-negative");
  const Weight range = potential_range.value_or(max_weight);
  if (range < 0) throw RangeError("potential_range must be non-negative");

  Rng rng(seed);
  std::vector<Weight> pi(n);
  for (auto& p : pi) p = rng.uniform(-range, range);

  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(rng.uniform(0, static_cast<Weight>(n) - 1));
    const auto v = static_cast<VertexId>(rng.uniform(0, static_cast<Weight>(n) - 1));
    if (u == v || !used.emplace(u, v).second) continue;
    const Weight base = rng.uniform(0, max_weight);
    edges.push_back({u, v, checked_sub(checked_add(base, pi[v]), pi[u])});
  }
  return Graph(n, edges);
}

}  // namespace neutralize
