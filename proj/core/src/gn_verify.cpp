#include "neutralize/gn_verify.hpp"

namespace neutralize {

namespace {

std::optional<std::string> compare_potential(const char* label, const GnLayout& layout,
                                             const Potential& engine, const Potential& expected) {
  if (engine.size() != expected.size()) {
    return std::string(label) + ": engine produced " + std::to_string(engine.size()) +
           " values, expected " + std::to_string(expected.size());
  }
  for (VertexId v = 0; v < expected.size(); ++v) {
    if (engine[v] != expected[v]) {
      return std::string(label) + " at " + layout.name(v) + " (id " + std::to_string(v) +
             "): engine " + std::to_string(engine[v]) + ", closed form " +
             std::to_string(expected[v]);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> verify_gn(unsigned n, const EtaFunction& eta_fn) {
  const GnInstance instance = gen_gn(n);
  const GnLayout& layout = instance.layout;
  const GnEta expected = gn_closed_form_eta(n);
  const EtaResult engine = eta_fn(instance.graph);
  const std::string prefix = "n=" + std::to_string(n) + ": ";

  if (auto m = compare_potential("eta_minus", layout, engine.eta_minus, expected.eta_minus)) {
    return prefix + *m;
  }
  if (auto m = compare_potential("eta", layout, engine.eta, expected.eta)) return prefix + *m;

  const Graph reduced = reduce_weights(instance.graph, engine.eta);
  const Graph expected_reduced = gn_closed_form_reduced(n);
  for (EdgeId e = 0; e < reduced.edge_count(); ++e) {
    if (reduced.weight(e) != expected_reduced.weight(e)) {
      return prefix + "reduced weight of edge " + std::to_string(e) + " (" +
             layout.name(reduced.src(e)) + " -> " + layout.name(reduced.dst(e)) + "): engine " +
             std::to_string(reduced.weight(e)) + ", closed form " +
             std::to_string(expected_reduced.weight(e));
    }
  }
  if (auto m = gn_self_similarity_mismatch(reduced, n)) return prefix + *m;
  return std::nullopt;
}

std::optional<std::string> verify_gn_up_to(unsigned n_max, const EtaFunction& eta_fn) {
  if (n_max < 1 || n_max > kMaxGn) {
    throw RangeError("n_max " + std::to_string(n_max) + " outside [1, " + std::to_string(kMaxGn) +
                     "]");
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    if (auto m = verify_gn(n, eta_fn)) return m;
  }
  return std::nullopt;
}

}  // namespace neutralize
