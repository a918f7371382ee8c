#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cliquesim/message.hpp"
#include "cliquesim/node_state.hpp"

namespace cliquesim {

// Whole-system snapshot. `buffers` holds the inboxes for the NEXT round,
// keyed by recipient; only nonempty inboxes are stored.
struct NetworkState {
  std::map<NodeId, NodeState> nodes;
  std::map<NodeId, std::vector<Message>> buffers;
  std::uint64_t round = 0;

  bool operator==(const NetworkState&) const = default;
};

struct ChurnEvent {
  enum class Kind { join, leave };

  std::uint64_t at_round = 0;
  Kind kind = Kind::join;
  NodeId id{};
  std::optional<NodeId> contact;  // join only

  bool operator==(const ChurnEvent&) const = default;
};

// One record per executed round. Message counts describe that round
// (delivered at its start, sent during it); the predicates and num_heaps
// describe the state after the round completed.
struct TraceRecord {
  std::uint64_t round = 0;
  std::size_t num_heaps = 0;
  bool is_valid = false;
  bool is_legal = false;
  std::uint64_t messages_delivered = 0;
  std::map<NodeId, std::uint64_t> per_node_sent;
  std::map<NodeId, std::uint64_t> per_node_received;

  bool operator==(const TraceRecord&) const = default;
};

}  // namespace cliquesim
