#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquesim/engine.hpp"
#include "cliquesim/topology.hpp"

namespace cliquesim {

struct OutputPaths {
  std::optional<std::string> trace_path;
  std::optional<std::string> metrics_path;
  std::optional<std::string> final_state_path;
};

struct Sweep {
  std::vector<std::size_t> n_values;
  std::vector<std::uint64_t> seeds;
};

struct ExperimentConfig {
  InitialStateSpec spec;
  std::uint64_t max_rounds = 1000;
  StopWhen stop_when = StopWhen::legal;
  std::vector<ChurnEvent> events;
  OutputPaths outputs;
  std::optional<Sweep> sweep;              // cross product n_values x seeds
  std::optional<std::uint64_t> fuzz_seed;  // per-round inbox permutation
  std::optional<std::string> load_path;    // start from a saved state
};

// Throws ParseError on malformed JSON, ConfigError on invalid settings.
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct PointRow {
  std::size_t n = 0;
  std::string kind;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> rounds_to_valid;
  std::optional<std::uint64_t> rounds_to_one_heap;
  std::optional<std::uint64_t> rounds_to_legal;
  std::uint64_t max_node_total_sent = 0;
  std::uint64_t max_node_total_recv = 0;
  std::uint64_t max_maintenance_per_round = 0;
  std::uint64_t dropped = 0;
  bool converged = false;
};

struct ExperimentResult {
  std::vector<PointRow> rows;
  bool all_converged = true;
};

// Expands the sweep, generates (or loads) each initial state, runs it, and
// writes the requested trace/metrics/state files. Sweep points suffix the
// trace and state paths with -n<k>-s<seed>; metrics rows share one CSV.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string metrics_header();
std::string metrics_row(const PointRow& row);
std::string trace_record_json(const TraceRecord& rec);

}  // namespace cliquesim
