#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquesim/network.hpp"
#include "cliquesim/protocol.hpp"
#include "cliquesim/work.hpp"

namespace cliquesim {

enum class StopWhen { legal, valid, one_heap, never };

std::string to_string(StopWhen w);
StopWhen parse_stop_when(const std::string& name);  // throws ConfigError

struct StepOptions {
  ProtocolConfig protocol{};
  // When set, each inbox is deterministically permuted (keyed by seed, round,
  // and node id) and handed to the node unsorted.
  std::optional<std::uint64_t> fuzz_seed;
  // When set, nodes are evaluated in a shuffled order instead of ascending id.
  // Results must not depend on this; it exists so tests can assert that.
  std::optional<std::uint64_t> node_order_seed;
};

// Executes one synchronous round: every node consumes its inbox and runs its
// periodic actions; all produced messages are routed into next-round inboxes.
// Messages to ids without a live node are dropped (counted via `dropped`).
TraceRecord step_round(NetworkState& net, const StepOptions& opts = {},
                       WorkTally* work = nullptr,
                       std::uint64_t* dropped = nullptr);

// Adds a fresh node knowing only `contact`. Throws EventError on duplicate id
// or unknown contact.
void apply_join(NetworkState& net, NodeId new_id, NodeId contact);

// Removes a node and purges its id from every other node's knowledge and from
// all buffered messages (sender, recipient, or carried id). Returns the number
// of buffered messages dropped. Throws EventError on unknown id or when it
// would empty the network.
std::uint64_t apply_leave(NetworkState& net, NodeId id);

struct RunOptions {
  std::uint64_t max_rounds = 1000;
  StopWhen stop_when = StopWhen::legal;
  std::vector<ChurnEvent> events;
  StepOptions step{};
};

struct RunResult {
  std::vector<TraceRecord> trace;
  // Number of executed rounds after which stop_when first held (0 = held
  // before any round). Predicates are only consulted once every scheduled
  // event has been applied, so churn runs measure post-event recovery.
  std::optional<std::uint64_t> stopped_at;
  std::optional<std::uint64_t> first_valid;
  std::optional<std::uint64_t> first_one_heap;
  std::optional<std::uint64_t> first_legal;
  WorkTally work;                         // whole run
  std::optional<WorkTally> work_at_legal; // snapshot when first_legal was set
  // Per-node per-round maxima over rounds executed at least two rounds after
  // first_legal (the settled maintenance regime).
  std::uint64_t maintenance_max_sent = 0;
  std::uint64_t maintenance_max_received = 0;
  std::uint64_t dropped = 0;
};

// Runs until stop_when holds (post-churn) or max_rounds rounds executed.
// Events fire at the start of their round, before delivery. Throws
// EventError for inapplicable events.
RunResult run(NetworkState& net, const RunOptions& opts = {});

}  // namespace cliquesim
