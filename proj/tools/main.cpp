#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cliquesim/errors.hpp"
#include "experiment.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw cliquesim::ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic simulator for a self-stabilizing "
               "list-and-clique overlay protocol"};

  std::string config_path;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> kind;
  std::optional<std::uint64_t> max_rounds;
  std::optional<std::string> stop_when;
  std::optional<std::string> trace_out;
  std::optional<std::string> metrics_out;
  std::optional<std::string> dump_path;
  std::optional<std::string> load_path;
  std::optional<std::uint64_t> fuzz_seed;
  std::optional<std::size_t> extra_edges;
  std::optional<std::size_t> num_heaps;
  std::optional<std::string> id_scheme;

  app.add_option("--config", config_path, "Experiment config (JSON)");
  app.add_option("--n", n, "Node count override");
  app.add_option("--seed", seed, "Seed override");
  app.add_option("--kind", kind,
                 "Topology kind: line, ring, star-in, star-out, random-tree, "
                 "random-connected, heap-forest, clique-legal, adversarial");
  app.add_option("--max-rounds", max_rounds, "Round budget");
  app.add_option("--stop-when", stop_when,
                 "Stop predicate: legal, valid, one-heap, never");
  app.add_option("--trace-out", trace_out, "Trace output path (JSONL)");
  app.add_option("--metrics-out", metrics_out, "Metrics output path (CSV)");
  app.add_option("--dump", dump_path, "Final state output path (JSON)");
  app.add_option("--load", load_path, "Initial state input path (JSON)");
  app.add_option("--fuzz-msg-order", fuzz_seed,
                 "Permute each inbox per round with this seed");
  app.add_option("--extra-edges", extra_edges,
                 "Extra knowledge edges (random-connected)");
  app.add_option("--num-heaps", num_heaps, "Heap count (heap-forest)");
  app.add_option("--id-scheme", id_scheme, "Id scheme: dense, sparse-random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cliquesim::ExperimentConfig cfg;
    if (!config_path.empty()) {
      cfg = cliquesim::parse_experiment_config(read_file(config_path));
    }
    if (n) cfg.spec.n = *n;
    if (seed) cfg.spec.seed = *seed;
    if (kind) cfg.spec.kind = cliquesim::parse_topology_kind(*kind);
    if (max_rounds) cfg.max_rounds = *max_rounds;
    if (stop_when) cfg.stop_when = cliquesim::parse_stop_when(*stop_when);
    if (trace_out) cfg.outputs.trace_path = *trace_out;
    if (metrics_out) cfg.outputs.metrics_path = *metrics_out;
    if (dump_path) cfg.outputs.final_state_path = *dump_path;
    if (load_path) cfg.load_path = *load_path;
    if (fuzz_seed) cfg.fuzz_seed = *fuzz_seed;
    if (extra_edges) cfg.spec.extra_edges = *extra_edges;
    if (num_heaps) cfg.spec.num_heaps = *num_heaps;
    if (id_scheme) cfg.spec.id_scheme = cliquesim::parse_id_scheme(*id_scheme);

    const cliquesim::ExperimentResult result = cliquesim::run_experiment(cfg);
    if (!result.all_converged) {
      for (const cliquesim::PointRow& row : result.rows) {
        if (!row.converged) {
          std::cerr << "did not reach stop predicate: kind=" << row.kind
                    << " n=" << row.n << " seed=" << row.seed << '\n';
        }
      }
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
