#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <vector>

#include "cliquesim/message.hpp"
#include "cliquesim/network.hpp"

namespace cliquesim {

// Per-node message and address counters. Addresses: 1 per message for the
// sender id, plus 1 when the extra id is present.
struct NodeWork {
  std::array<std::uint64_t, kMessageTypeCount> sent{};
  std::array<std::uint64_t, kMessageTypeCount> received{};
  std::uint64_t sent_ids = 0;
  std::uint64_t recv_ids = 0;

  std::uint64_t sent_total() const {
    return std::accumulate(sent.begin(), sent.end(), std::uint64_t{0});
  }
  std::uint64_t recv_total() const {
    return std::accumulate(received.begin(), received.end(), std::uint64_t{0});
  }
  std::uint64_t sent_in(std::initializer_list<MessageType> types) const {
    std::uint64_t n = 0;
    for (MessageType t : types) n += sent[static_cast<std::size_t>(t)];
    return n;
  }
  std::uint64_t received_in(std::initializer_list<MessageType> types) const {
    std::uint64_t n = 0;
    for (MessageType t : types) n += received[static_cast<std::size_t>(t)];
    return n;
  }

  bool operator==(const NodeWork&) const = default;
};

struct WorkTally {
  std::map<NodeId, NodeWork> per_node;
  NodeWork totals;

  void add_sent(const Message& m) {
    NodeWork& w = per_node[m.sender];
    const auto i = static_cast<std::size_t>(m.type);
    w.sent[i]++;
    w.sent_ids += m.id_count();
    totals.sent[i]++;
    totals.sent_ids += m.id_count();
  }

  void add_received(const Message& m) {
    NodeWork& w = per_node[m.recipient];
    const auto i = static_cast<std::size_t>(m.type);
    w.received[i]++;
    w.recv_ids += m.id_count();
    totals.received[i]++;
    totals.recv_ids += m.id_count();
  }

  bool operator==(const WorkTally&) const = default;
};

// Trace-level work summary: per-node totals over the stabilization window
// (records up to and including the first one marked legal) and per-node
// per-round maxima afterwards, skipping two settling rounds.
struct WorkSummary {
  std::optional<std::size_t> first_legal_record;
  std::map<NodeId, std::uint64_t> stabilization_sent;
  std::map<NodeId, std::uint64_t> stabilization_received;
  std::uint64_t max_stabilization_sent = 0;
  std::uint64_t max_stabilization_received = 0;
  std::uint64_t max_maintenance_sent = 0;
  std::uint64_t max_maintenance_received = 0;
};

WorkSummary work_report(const std::vector<TraceRecord>& trace);

}  // namespace cliquesim
