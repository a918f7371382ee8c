#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cliquesim/engine.hpp"
#include "cliquesim/message.hpp"
#include "cliquesim/network.hpp"
#include "cliquesim/topology.hpp"

namespace cliquesim {

// Stringification used by the test assertions.
inline std::ostream& operator<<(std::ostream& os, const Message& m) {
  os << to_string(m.type) << ' ' << m.sender << "->" << m.recipient;
  if (m.extra) os << '(' << *m.extra << ')';
  return os;
}

namespace test {

inline NodeId nid(std::uint64_t v) { return NodeId{v}; }

inline std::vector<NodeId> ids(std::initializer_list<std::uint64_t> vs) {
  std::vector<NodeId> out;
  out.reserve(vs.size());
  for (auto v : vs) out.push_back(NodeId{v});
  return out;
}

inline CircularList list(std::initializer_list<std::uint64_t> vs) {
  return CircularList::from_items(ids(vs), 0);
}

// Declarative node fixture. Lists are inserted in the given order with the
// cursor on the first element; inserts are raw (no self-suppression) so
// deliberately broken states can be built too.
struct Node {
  std::uint64_t id = 0;
  std::optional<std::uint64_t> pred{};
  std::optional<std::uint64_t> succ{};
  std::vector<std::uint64_t> neighbors{};
  std::vector<std::uint64_t> downstream{};
  std::vector<std::uint64_t> scanned{};
  bool active = true;
};

inline NodeState make_node(const Node& spec) {
  NodeState st;
  st.id = NodeId{spec.id};
  if (spec.pred) st.pred = NodeId{*spec.pred};
  if (spec.succ) st.succ = NodeId{*spec.succ};
  for (auto v : spec.neighbors) st.neighbors.insert(NodeId{v}, Place::tail);
  for (auto v : spec.downstream) st.downstream.insert(NodeId{v}, Place::tail);
  for (auto v : spec.scanned) st.scan_set.insert(NodeId{v});
  st.status = spec.active ? Status::active : Status::inactive;
  return st;
}

inline NetworkState make_net(std::initializer_list<Node> nodes) {
  NetworkState net;
  for (const Node& n : nodes) {
    NodeState st = make_node(n);
    net.nodes.emplace(st.id, std::move(st));
  }
  return net;
}

inline NetworkState legal_clique(std::size_t n) {
  return generate({.kind = TopologyKind::clique_legal, .n = n});
}

inline Message msg(MessageType t, std::uint64_t sender, std::uint64_t rcpt,
                   std::optional<std::uint64_t> extra = std::nullopt) {
  return make_message(t, NodeId{sender}, NodeId{rcpt},
                      extra ? std::optional<NodeId>(NodeId{*extra})
                            : std::nullopt);
}

inline std::size_t count_type(const Outbox& out, MessageType t) {
  std::size_t n = 0;
  for (const Message& m : out) n += m.type == t ? 1 : 0;
  return n;
}

inline std::string dump(const Outbox& out) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) os << ", ";
    os << out[i];
  }
  os << ']';
  return os.str();
}

inline std::vector<NodeId> live_ids(const NetworkState& net) {
  std::vector<NodeId> out;
  out.reserve(net.nodes.size());
  for (const auto& [id, st] : net.nodes) out.push_back(id);
  return out;
}

inline void step_n(NetworkState& net, std::size_t rounds,
                   const StepOptions& opts = {}) {
  for (std::size_t i = 0; i < rounds; ++i) step_round(net, opts);
}

}  // namespace test
}  // namespace cliquesim
