#pragma once

#include <optional>
#include <string>

#include "neutralize/elmasry.hpp"
#include "neutralize/families.hpp"

namespace neutralize {

/// Runs `eta_fn` on G_n and compares against the closed forms: η⁻ and η on
/// every vertex, the reweighted graph on every edge, and the G_{n−1}
/// self-similarity of the reweighted graph. Returns the first mismatch,
/// naming the vertex or edge, or std::nullopt if everything agrees.
std::optional<std::string> verify_gn(unsigned n, const EtaFunction& eta_fn = compute_eta);

/// verify_gn for n = 1..n_max, stopping at the first mismatch.
/// Throws RangeError if n_max is outside [1, 37].
std::optional<std::string> verify_gn_up_to(unsigned n_max, const EtaFunction& eta_fn = compute_eta);

}  // namespace neutralize
