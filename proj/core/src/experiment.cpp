#include "neutralize/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <ostream>
#include <thread>

#include "neutralize/elmasry.hpp"
#include "neutralize/families.hpp"
#include "neutralize/weight_seq.hpp"

namespace neutralize {

namespace {

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::Gn, "gn"},
    {Family::HardPath, "hardpath"},
    {Family::AltPath, "altpath"},
    {Family::Random, "random"},
};

unsigned narrow_param(std::uint64_t param, std::uint64_t max, std::string_view what) {
  if (param > max) {
    throw RangeError(std::string(what) + " parameter " + std::to_string(param) + " exceeds " +
                     std::to_string(max));
  }
  return static_cast<unsigned>(param);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (auto [family, label] : kFamilies) {
    if (label == name) return family;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (auto [f, label] : kFamilies) {
    if (f == family) return label;
  }
  return "unknown";
}

Graph build_instance(Family family, std::uint64_t param, const RandomSpec& random) {
  switch (family) {
    case Family::Gn:
      return gen_gn(narrow_param(param, kMaxGn, "gn")).graph;
    case Family::HardPath:
      return seq_to_path_graph(gen_hard_path(narrow_param(param, 30, "hardpath")));
    case Family::AltPath:
      return seq_to_path_graph(gen_alternating_path(param));
    case Family::Random: {
      const std::size_t n = param;
      const std::size_t m =
          random.edges.value_or(n == 0 ? 0 : std::min<std::size_t>(4 * n, n * (n - 1)));
      return gen_random_graph(n, m, random.max_weight, random.seed, random.potential_range);
    }
  }
  throw RangeError("unknown family");
}

ExperimentRow run_experiment(Family family, std::uint64_t param, const RandomSpec& random,
                             std::optional<std::size_t> max_iters) {
  const Graph g = build_instance(family, param, random);
  RunOptions options;
  options.max_iters = max_iters;

  const auto start = std::chrono::steady_clock::now();
  const IterationTrace trace = run_to_fixpoint(g, options);
  const auto stop = std::chrono::steady_clock::now();

  ExperimentRow row;
  row.family = std::string(family_name(family));
  row.param = param;
  row.vertices = g.vertex_count();
  row.edges = g.edge_count();
  row.iterations = trace.iterations_executed;
  for (const auto& record : trace.iterations) {
    row.min_snake_by_iter.push_back(record.min_snake_length_after);
  }
  row.wall_time_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  return row;
}

std::vector<ExperimentRow> run_bench(Family family, std::uint64_t first, std::uint64_t last,
                                     const RandomSpec& random, unsigned jobs,
                                     std::optional<std::size_t> max_iters) {
  if (first > last) return {};
  const std::size_t count = last - first + 1;
  std::vector<ExperimentRow> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        rows[k] = run_experiment(family, first + k, random, max_iters);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.param << ',' << r.vertices << ',' << r.edges << ','
        << r.iterations << ',' << r.wall_time_ns << '\n';
  }
}

}  // namespace neutralize
