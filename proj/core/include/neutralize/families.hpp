#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "neutralize/graph.hpp"
#include "neutralize/weight_seq.hpp"

namespace neutralize {

/// Vertex ids of the layered instance G_n: x_i has id i and y_i has id
/// 2n + 1 + i, for 0 <= i <= 2n.
struct GnLayout {
  unsigned n = 0;

  VertexId x(std::size_t i) const { return i; }
  VertexId y(std::size_t i) const { return 2 * std::size_t{n} + 1 + i; }
  std::size_t vertex_count() const { return 4 * std::size_t{n} + 2; }
  std::size_t edge_count() const { return 6 * std::size_t{n}; }
  /// "x_3", "y_0", ...
  std::string name(VertexId v) const;
};

inline constexpr unsigned kMaxGn = 37;

struct GnInstance {
  Graph graph;
  GnLayout layout;
};

/// G_n for 1 <= n <= 37. For each 0 <= i < n, in this order:
///   x_{2i}   → x_{2i+1}  −2·3^{n−i}
///   x_{2i+1} → x_{2i+2}   2·3^{n−i−1}
///   y_{2i}   → y_{2i+1}  −3^{n−i}
///   y_{2i+1} → y_{2i+2}   0
///   x_{2i+1} → y_{2i+2}   3^{n−i−1}
///   y_{2i+1} → x_{2i+2}   0
/// Throws RangeError outside [1, 37].
GnInstance gen_gn(unsigned n);

struct GnEta {
  Potential eta_minus;
  Potential eta;
};

/// Closed-form potentials of the first iteration on G_n, indexed by GnLayout ids.
GnEta gn_closed_form_eta(unsigned n);

/// Closed-form weights of G_n after the first iteration, in gen_gn's edge order.
Graph gn_closed_form_reduced(unsigned n);

/// Checks that the subgraph of `reduced` induced on x_j, y_j (j >= 2) equals
/// G_{n−1} once x_j ↦ y_{j−2} and y_j ↦ x_{j−2}. Returns a description of the
/// first difference, or std::nullopt. For n = 1 the expected subgraph is two
/// isolated vertices.
std::optional<std::string> gn_self_similarity_mismatch(const Graph& reduced, unsigned n);

/// Recursive hard path of length 2^s, 1 <= s <= 30: P_1 = (−1, 1), and P_{s+1}
/// replaces each pair (a, b) of P_s by (a − 1, 1, −1, b + 1).
WeightSeq gen_hard_path(unsigned s);

/// (−1, 1) repeated k times. Throws PreconditionError for k = 0.
WeightSeq gen_alternating_path(std::size_t k);

/// Random graph without negative cycles.
///
/// Draws m distinct (src, dst) pairs without self-loops, base weights w(e)
/// uniform in [0, max_weight], and a potential π(v) uniform in
/// [−potential_range, potential_range] (potential_range defaults to
/// max_weight). Edge weights are w(u,v) + π(v) − π(u), so every cycle keeps its
/// non-negative base sum.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`; bounded integers
/// are drawn by rejection sampling on the raw 64-bit output, so the instance is
/// identical on every platform. Throws RangeError if m > n(n−1) or n = 0.
Graph gen_random_graph(std::size_t n, std::size_t m, Weight max_weight, std::uint64_t seed,
                       std::optional<Weight> potential_range = std::nullopt);

}  // namespace neutralize
