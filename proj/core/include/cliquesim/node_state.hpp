#pragma once

#include <optional>
#include <set>

#include "cliquesim/circular_list.hpp"
#include "cliquesim/ids.hpp"

namespace cliquesim {

/// Complete local state of one node.
///
/// Invariants (kept by the protocol actions and the generators):
///  - the node's own id never appears in neighbors or scan_set (downstream
///    may hold it: an id being relayed down passes through its own node),
///  - pred != id and succ != id,
///  - neighbors and downstream are duplicate-free.
struct NodeState {
  NodeId id;
  std::optional<NodeId> pred;  // believed predecessor (larger id)
  std::optional<NodeId> succ;  // believed successor (smaller id)
  CircularList neighbors;      // known ids, round-robin forwarded to pred
  CircularList downstream;     // ids to relay down to succ
  std::set<NodeId> scan_set;   // ids picked up from scan traffic, pending
  Status status = Status::inactive;

  bool operator==(const NodeState&) const = default;

  /// Self-suppressing inserts: remembering your own id is a no-op.
  bool remember_neighbor(NodeId v, Place place) {
    if (v == id) return false;
    return neighbors.insert(v, place);
  }
  bool remember_downstream(NodeId v, Place place) {
    if (v == id) return false;
    return downstream.insert(v, place);
  }
  bool remember_scanned(NodeId v) {
    if (v == id) return false;
    return scan_set.insert(v).second;
  }
};

}  // namespace cliquesim
