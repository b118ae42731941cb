#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutralize/graph.hpp"

namespace neutralize {

enum class Family { Gn, HardPath, AltPath, Random };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);

/// Extra knobs for the random family; `param` is the vertex count.
struct RandomSpec {
  /// Edge count; defaults to min(4n, n(n−1)).
  std::optional<std::size_t> edges;
  Weight max_weight = 100;
  std::optional<Weight> potential_range;
  std::uint64_t seed = 1;
};

/// Builds one instance: G_param, the hard path of level param, the
/// alternating path with param (−1, 1) pairs, or a random graph on param
/// vertices. Paths are returned as path graphs.
Graph build_instance(Family family, std::uint64_t param, const RandomSpec& random = {});

struct ExperimentRow {
  std::string family;
  std::uint64_t param = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t iterations = 0;
  /// One entry per iteration; empty when no negative edge remained.
  std::vector<std::optional<std::size_t>> min_snake_by_iter;
  std::uint64_t wall_time_ns = 0;
};

/// Builds the instance and times run_to_fixpoint on it.
ExperimentRow run_experiment(Family family, std::uint64_t param, const RandomSpec& random = {},
                             std::optional<std::size_t> max_iters = std::nullopt);

/// One row per param in [first, last] (none if first > last), ordered by
/// param. Up to `jobs` instances run concurrently, each on its own thread.
std::vector<ExperimentRow> run_bench(Family family, std::uint64_t first, std::uint64_t last,
                                     const RandomSpec& random = {}, unsigned jobs = 1,
                                     std::optional<std::size_t> max_iters = std::nullopt);

inline constexpr std::string_view kCsvHeader =
    "family,param,vertices,edges,iterations,wall_time_ns";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace neutralize
