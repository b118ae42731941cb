// neutralize: command-line front end for the potential-neutralization engine.
//
// Exit codes: 0 ok, 2 usage/range/IO, 3 negative cycle, 4 iteration limit,
// 5 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "neutralize/baseline.hpp"
#include "neutralize/elmasry.hpp"
#include "neutralize/experiment.hpp"
#include "neutralize/families.hpp"
#include "neutralize/gn_verify.hpp"
#include "neutralize/graph_io.hpp"

namespace {

using namespace neutralize;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNegativeCycle = 3;
constexpr int kIterationLimit = 4;
constexpr int kMismatch = 5;

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const NegativeCycleError& e) {
    std::cerr << "error: " << e.what() << "; witness edges (1-based):";
    for (EdgeId id : e.witness()) std::cerr << ' ' << id + 1;
    std::cerr << '\n';
    return kNegativeCycle;
  } catch (const IterationLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIterationLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

std::optional<std::size_t> resolve_max_iters(std::optional<std::size_t> flag) {
  if (flag) return flag;
  const char* env = std::getenv("NEUTRALIZE_MAX_ITERS");
  if (env == nullptr || *env == '\0') return std::nullopt;
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0' || value == 0) {
    throw RangeError(std::string("NEUTRALIZE_MAX_ITERS='") + env + "' is not a positive integer");
  }
  return static_cast<std::size_t>(value);
}

void emit_graph(const Graph& g, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    write_graph(std::cout, g);
  } else {
    write_graph_file(out_path, g);
  }
}

struct GenArgs {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::uint64_t k = 0;
  std::optional<std::size_t> m;
  Weight max_weight = 100;
  std::optional<Weight> potential_range;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  auto family = parse_family(a.family);
  if (!family) throw RangeError("unknown family '" + a.family + "'");
  RandomSpec random{a.m, a.max_weight, a.potential_range, a.seed};
  std::uint64_t param = 0;
  switch (*family) {
    case Family::Gn: param = a.n; break;
    case Family::HardPath: param = a.s; break;
    case Family::AltPath: param = a.k; break;
    case Family::Random: param = a.n; break;
  }
  emit_graph(build_instance(*family, param, random), a.out);
  return kOk;
}

struct RunArgs {
  std::string graph;
  std::string trace;
  std::optional<std::size_t> max_iters;
};

int cmd_run(const RunArgs& a) {
  const Graph g = read_graph_file(a.graph);
  RunOptions options;
  options.max_iters = resolve_max_iters(a.max_iters);
  const IterationTrace trace = run_to_fixpoint(g, options);
  std::cout << "iterations " << trace.iterations_executed << '\n' << "status neutralized\n";
  if (!a.trace.empty()) {
    std::ofstream out(a.trace, std::ios::binary);
    if (!out) throw IoError("cannot open '" + a.trace + "' for writing");
    out << trace_to_json(trace);
  }
  return kOk;
}

struct VerifyArgs {
  std::string family = "gn";
  unsigned n_max = 0;
  bool skip_phase2 = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.family != "gn") throw RangeError("verify supports only --family gn");
  EtaFunction eta_fn = compute_eta;
  if (a.skip_phase2) {
    eta_fn = [](const Graph& g) {
      EtaResult r = compute_eta(g);
      r.eta = r.eta_minus;
      return r;
    };
  }
  if (auto mismatch = verify_gn_up_to(a.n_max, eta_fn)) {
    std::cout << "MISMATCH " << *mismatch << '\n';
    return kMismatch;
  }
  std::cout << "ok: G_1..G_" << a.n_max << " match the closed forms\n";
  return kOk;
}

struct BenchArgs {
  std::string family;
  std::uint64_t from = 1;
  std::uint64_t to = 0;
  std::string csv;
  unsigned jobs = 1;
  std::optional<std::size_t> m;
  Weight max_weight = 100;
  std::optional<Weight> potential_range;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_iters;
};

int cmd_bench(const BenchArgs& a) {
  auto family = parse_family(a.family);
  if (!family) throw RangeError("unknown family '" + a.family + "'");
  RandomSpec random{a.m, a.max_weight, a.potential_range, a.seed};
  const auto rows =
      run_bench(*family, a.from, a.to, random, a.jobs, resolve_max_iters(a.max_iters));
  if (a.csv.empty() || a.csv == "-") {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(a.csv, std::ios::binary);
    if (!out) throw IoError("cannot open '" + a.csv + "' for writing");
    write_csv(out, rows);
    if (!out) throw IoError("write to '" + a.csv + "' failed");
  }
  return kOk;
}

struct SsspArgs {
  std::string graph;
  std::size_t source = 1;
  std::string algo = "elmasry";
  std::optional<std::size_t> max_iters;
};

int cmd_sssp(const SsspArgs& a) {
  const Graph g = read_graph_file(a.graph);
  if (a.source < 1 || a.source > g.vertex_count()) {
    throw RangeError("source " + std::to_string(a.source) + " outside [1, " +
                     std::to_string(g.vertex_count()) + "]");
  }
  const VertexId source = a.source - 1;
  DistanceArray dist;
  if (a.algo == "elmasry") {
    RunOptions options;
    options.max_iters = resolve_max_iters(a.max_iters);
    dist = sssp(g, source, options);
  } else if (a.algo == "bellman-ford") {
    dist = bellman_ford(g, source);
  } else {
    throw RangeError("unknown algorithm '" + a.algo + "'");
  }
  for (VertexId v = 0; v < dist.size(); ++v) {
    std::cout << "v " << v + 1 << ' ';
    if (dist[v]) {
      std::cout << *dist[v];
    } else {
      std::cout << "UNREACHABLE";
    }
    std::cout << '\n';
  }
  return kOk;
}

void add_random_options(CLI::App* cmd, std::optional<std::size_t>& m, Weight& max_weight,
                        std::optional<Weight>& potential_range, std::uint64_t& seed) {
  cmd->add_option("--m", m, "random: edge count (default min(4n, n(n-1)))");
  cmd->add_option("--max-weight", max_weight, "random: base weights drawn from [0, W]")
      ->capture_default_str();
  cmd->add_option("--potential-range", potential_range,
                  "random: shift potential drawn from [-R, R] (default W)");
  cmd->add_option("--seed", seed, "random: generator seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterative potential neutralization: instance families, engine runs, checks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write an instance in DIMACS shortest-path format");
  gen_cmd->add_option("--family", gen.family, "gn | hardpath | altpath | random")->required();
  gen_cmd->add_option("--n", gen.n, "gn: layer parameter; random: vertex count");
  gen_cmd->add_option("--s", gen.s, "hardpath: recursion level (length 2^s)");
  gen_cmd->add_option("--k", gen.k, "altpath: number of (-1, 1) pairs");
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");
  add_random_options(gen_cmd, gen.m, gen.max_weight, gen.potential_range, gen.seed);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Iterate to a neutralizing potential");
  run_cmd->add_option("graph,--graph", run.graph, "graph file")->required();
  run_cmd->add_option("--trace", run.trace, "write the iteration trace as JSON");
  run_cmd->add_option("--max-iters", run.max_iters,
                      "iteration cap (default: vertices + 1, or NEUTRALIZE_MAX_ITERS)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check G_1..G_n against the closed forms");
  verify_cmd->add_option("--family", verify.family, "instance family (gn)")->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "largest n to check (1..37)")->required();
  verify_cmd->add_flag("--skip-phase2", verify.skip_phase2,
                       "diagnostic: drop the second propagation phase")
      ->group("");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Iteration counts over a parameter range as CSV");
  bench_cmd->add_option("--family", bench.family, "gn | hardpath | altpath | random")->required();
  bench_cmd->add_option("--from", bench.from, "first parameter")->capture_default_str();
  bench_cmd->add_option("--to", bench.to, "last parameter")->required();
  bench_cmd->add_option("--csv", bench.csv, "output CSV path (default stdout)");
  bench_cmd->add_option("--jobs", bench.jobs, "instances run concurrently")->capture_default_str();
  bench_cmd->add_option("--max-iters", bench.max_iters, "iteration cap per instance");
  add_random_options(bench_cmd, bench.m, bench.max_weight, bench.potential_range, bench.seed);

  SsspArgs sp;
  auto* sssp_cmd = app.add_subcommand("sssp", "Single-source distances");
  sssp_cmd->add_option("graph,--graph", sp.graph, "graph file")->required();
  sssp_cmd->add_option("--source", sp.source, "source vertex (1-based)")->capture_default_str();
  sssp_cmd->add_option("--algo", sp.algo, "elmasry | bellman-ford")->capture_default_str();
  sssp_cmd->add_option("--max-iters", sp.max_iters, "iteration cap for elmasry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*gen_cmd) return guarded([&] { return cmd_gen(gen); });
  if (*run_cmd) return guarded([&] { return cmd_run(run); });
  if (*verify_cmd) return guarded([&] { return cmd_verify(verify); });
  if (*bench_cmd) return guarded([&] { return cmd_bench(bench); });
  if (*sssp_cmd) return guarded([&] { return cmd_sssp(sp); });
  return kUsage;
}
