#include "experiment.hpp"

#include <fstream>
#include <sstream>

#include "cliquesim/errors.hpp"
#include "cliquesim/state_io.hpp"
#include "cliquesim/work.hpp"

#include "json.hpp"

namespace cliquesim {

namespace {

using Json = nlohmann::ordered_json;

InitialStateSpec parse_spec(const Json& j) {
  InitialStateSpec spec;
  if (j.contains("kind")) spec.kind = parse_topology_kind(j["kind"].get<std::string>());
  if (j.contains("n")) spec.n = j["n"].get<std::size_t>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("id_scheme")) spec.id_scheme = parse_id_scheme(j["id_scheme"].get<std::string>());
  if (j.contains("extra_edges")) spec.extra_edges = j["extra_edges"].get<std::size_t>();
  if (j.contains("num_heaps")) spec.num_heaps = j["num_heaps"].get<std::size_t>();
  return spec;
}

std::vector<ChurnEvent> parse_events(const Json& j) {
  std::vector<ChurnEvent> events;
  for (const Json& je : j) {
    ChurnEvent e;
    e.at_round = je.at("at_round").get<std::uint64_t>();
    const std::string kind = je.at("kind").get<std::string>();
    e.id = NodeId{je.at("id").get<std::uint64_t>()};
    if (kind == "join") {
      e.kind = ChurnEvent::Kind::join;
      e.contact = NodeId{je.at("contact").get<std::uint64_t>()};
    } else if (kind == "leave") {
      e.kind = ChurnEvent::Kind::leave;
    } else {
      throw ConfigError("unknown event kind: " + kind);
    }
    events.push_back(e);
  }
  return events;
}

std::string with_point_suffix(const std::string& path, std::size_t n,
                              std::uint64_t seed) {
  std::ostringstream suffix;
  suffix << "-n" << n << "-s" << seed;
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + suffix.str();
  }
  return path.substr(0, dot) + suffix.str() + path.substr(dot);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw ConfigError("cannot open output file: " + path);
  return os;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    ExperimentConfig cfg;
    if (doc.contains("spec")) cfg.spec = parse_spec(doc["spec"]);
    if (doc.contains("max_rounds")) cfg.max_rounds = doc["max_rounds"].get<std::uint64_t>();
    if (doc.contains("stop_when")) cfg.stop_when = parse_stop_when(doc["stop_when"].get<std::string>());
    if (doc.contains("events")) cfg.events = parse_events(doc["events"]);
    if (doc.contains("outputs")) {
      const Json& jo = doc["outputs"];
      if (jo.contains("trace_path")) cfg.outputs.trace_path = jo["trace_path"].get<std::string>();
      if (jo.contains("metrics_path")) cfg.outputs.metrics_path = jo["metrics_path"].get<std::string>();
      if (jo.contains("final_state_path")) cfg.outputs.final_state_path = jo["final_state_path"].get<std::string>();
    }
    if (doc.contains("sweep")) {
      Sweep sweep;
      for (const Json& jn : doc["sweep"].at("n_values")) sweep.n_values.push_back(jn.get<std::size_t>());
      for (const Json& js : doc["sweep"].at("seeds")) sweep.seeds.push_back(js.get<std::uint64_t>());
      cfg.sweep = std::move(sweep);
    }
    if (doc.contains("fuzz_msg_order")) cfg.fuzz_seed = doc["fuzz_msg_order"].get<std::uint64_t>();
    if (doc.contains("load")) cfg.load_path = doc["load"].get<std::string>();
    if (cfg.max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
    if (cfg.sweep && (cfg.sweep->n_values.empty() || cfg.sweep->seeds.empty())) {
      throw ConfigError("sweep requires nonempty n_values and seeds");
    }
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what());
  }
}

std::string metrics_header() {
  return "n,kind,seed,rounds_to_valid,rounds_to_one_heap,rounds_to_legal,"
         "max_node_total_sent,max_node_total_recv,max_maintenance_per_round,"
         "dropped";
}

namespace {

std::string opt_cell(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string metrics_row(const PointRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.kind << ',' << row.seed << ','
     << opt_cell(row.rounds_to_valid) << ',' << opt_cell(row.rounds_to_one_heap)
     << ',' << opt_cell(row.rounds_to_legal) << ',' << row.max_node_total_sent
     << ',' << row.max_node_total_recv << ',' << row.max_maintenance_per_round
     << ',' << row.dropped;
  return os.str();
}

std::string trace_record_json(const TraceRecord& rec) {
  Json j;
  j["round"] = rec.round;
  j["num_heaps"] = rec.num_heaps;
  j["is_valid"] = rec.is_valid;
  j["is_legal"] = rec.is_legal;
  j["messages_delivered"] = rec.messages_delivered;
  Json sent;
  for (const auto& [id, c] : rec.per_node_sent) sent[std::to_string(id.value)] = c;
  j["per_node_sent"] = std::move(sent);
  Json received;
  for (const auto& [id, c] : rec.per_node_received) received[std::to_string(id.value)] = c;
  j["per_node_received"] = std::move(received);
  return j.dump();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.sweep && cfg.load_path) {
    throw ConfigError("sweep cannot be combined with a loaded state");
  }

  struct Point {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Point> points;
  if (cfg.sweep) {
    for (std::size_t n : cfg.sweep->n_values) {
      for (std::uint64_t seed : cfg.sweep->seeds) points.push_back({n, seed});
    }
  } else {
    points.push_back({cfg.spec.n, cfg.spec.seed});
  }
  const bool suffix_outputs = cfg.sweep.has_value();

  std::optional<std::ofstream> metrics;
  if (cfg.outputs.metrics_path) {
    metrics = open_out(*cfg.outputs.metrics_path);
    *metrics << metrics_header() << '\n';
  }

  ExperimentResult result;
  for (const Point& pt : points) {
    NetworkState net;
    std::string kind;
    if (cfg.load_path) {
      net = load_state(read_file(*cfg.load_path));
      kind = "loaded";
    } else {
      InitialStateSpec spec = cfg.spec;
      spec.n = pt.n;
      spec.seed = pt.seed;
      net = generate(spec);
      kind = to_string(spec.kind);
    }

    RunOptions opts;
    opts.max_rounds = cfg.max_rounds;
    opts.stop_when = cfg.stop_when;
    opts.events = cfg.events;
    opts.step.fuzz_seed = cfg.fuzz_seed;
    RunResult run_result = run(net, opts);

    PointRow row;
    row.n = net.nodes.size();
    row.kind = kind;
    row.seed = pt.seed;
    row.rounds_to_valid = run_result.first_valid;
    row.rounds_to_one_heap = run_result.first_one_heap;
    row.rounds_to_legal = run_result.first_legal;
    const WorkTally& stab =
        run_result.work_at_legal ? *run_result.work_at_legal : run_result.work;
    for (const auto& [id, w] : stab.per_node) {
      row.max_node_total_sent = std::max(row.max_node_total_sent, w.sent_total());
      row.max_node_total_recv = std::max(row.max_node_total_recv, w.recv_total());
    }
    row.max_maintenance_per_round = std::max(run_result.maintenance_max_sent,
                                             run_result.maintenance_max_received);
    row.dropped = run_result.dropped;
    row.converged =
        cfg.stop_when == StopWhen::never || run_result.stopped_at.has_value();
    result.all_converged = result.all_converged && row.converged;

    if (cfg.outputs.trace_path) {
      std::string path = suffix_outputs
                             ? with_point_suffix(*cfg.outputs.trace_path, pt.n, pt.seed)
                             : *cfg.outputs.trace_path;
      std::ofstream os = open_out(path);
      for (const TraceRecord& rec : run_result.trace) {
        os << trace_record_json(rec) << '\n';
      }
    }
    if (cfg.outputs.final_state_path) {
      std::string path = suffix_outputs
                             ? with_point_suffix(*cfg.outputs.final_state_path, pt.n, pt.seed)
                             : *cfg.outputs.final_state_path;
      std::ofstream os = open_out(path);
      save_state(os, net);
    }
    if (metrics) *metrics << metrics_row(row) << '\n';
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace cliquesim
