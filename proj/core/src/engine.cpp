#include "cliquesim/engine.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "cliquesim/errors.hpp"
#include "cliquesim/rng.hpp"
#include "cliquesim/verify.hpp"

namespace cliquesim {

std::string to_string(StopWhen w) {
  switch (w) {
    case StopWhen::legal: return "legal";
    case StopWhen::valid: return "valid";
    case StopWhen::one_heap: return "one-heap";
    case StopWhen::never: return "never";
  }
  return "?";
}

StopWhen parse_stop_when(const std::string& name) {
  if (name == "legal") return StopWhen::legal;
  if (name == "valid") return StopWhen::valid;
  if (name == "one-heap") return StopWhen::one_heap;
  if (name == "never") return StopWhen::never;
  throw ConfigError("unknown stop predicate: " + name);
}

TraceRecord step_round(NetworkState& net, const StepOptions& opts,
                       WorkTally* work, std::uint64_t* dropped) {
  TraceRecord rec;
  rec.round = net.round;

  std::map<NodeId, std::vector<Message>> inboxes = std::move(net.buffers);
  net.buffers.clear();

  for (const auto& [id, st] : net.nodes) {
    rec.per_node_sent.emplace(id, 0);
    rec.per_node_received.emplace(id, 0);
  }
  for (const auto& [id, msgs] : inboxes) {
    assert(net.nodes.count(id) != 0);
    rec.per_node_received[id] = msgs.size();
    rec.messages_delivered += msgs.size();
    if (work) {
      for (const Message& m : msgs) work->add_received(m);
    }
  }

  std::vector<NodeId> order;
  order.reserve(net.nodes.size());
  for (const auto& [id, st] : net.nodes) order.push_back(id);
  if (opts.node_order_seed) {
    Rng(Rng::derive(*opts.node_order_seed, net.round)).shuffle(order);
  }

  std::map<NodeId, Outbox> outboxes;
  for (NodeId id : order) {
    std::vector<Message> inbox;
    if (auto it = inboxes.find(id); it != inboxes.end()) {
      inbox = std::move(it->second);
    }
    ProtocolConfig pc = opts.protocol;
    if (opts.fuzz_seed) {
      Rng(Rng::derive(*opts.fuzz_seed, net.round, id.value)).shuffle(inbox);
      pc.inbox_order = ProtocolConfig::InboxOrder::as_given;
    }
    Outbox out;
    node_round(net.nodes.at(id), std::move(inbox), out, pc);
    if (!out.empty()) outboxes.emplace(id, std::move(out));
  }

  // Route in ascending sender order so inbox arrival order is independent of
  // the evaluation order above.
  std::uint64_t dropped_here = 0;
  for (auto& [sender, out] : outboxes) {
    rec.per_node_sent[sender] = out.size();
    for (Message& m : out) {
      if (work) work->add_sent(m);
      if (net.nodes.count(m.recipient) != 0) {
        net.buffers[m.recipient].push_back(std::move(m));
      } else {
        ++dropped_here;
      }
    }
  }
  if (dropped) *dropped += dropped_here;

  ++net.round;
  rec.num_heaps = num_heaps(net);
  rec.is_valid = is_valid(net);
  rec.is_legal = is_legal(net);
  return rec;
}

void apply_join(NetworkState& net, NodeId new_id, NodeId contact) {
  if (net.nodes.count(new_id) != 0) {
    throw EventError("join of already present node " + to_string(new_id));
  }
  auto it = net.nodes.find(contact);
  if (it == net.nodes.end()) {
    throw EventError("join contact " + to_string(contact) + " is not present");
  }
  NodeState st;
  st.id = new_id;
  st.remember_neighbor(contact, Place::tail);
  net.nodes.emplace(new_id, std::move(st));
}

std::uint64_t apply_leave(NetworkState& net, NodeId id) {
  auto it = net.nodes.find(id);
  if (it == net.nodes.end()) {
    throw EventError("leave of unknown node " + to_string(id));
  }
  if (net.nodes.size() == 1) {
    throw EventError("leave would empty the network");
  }
  net.nodes.erase(it);

  for (auto& [other, st] : net.nodes) {
    st.neighbors.erase(id);
    st.downstream.erase(id);
    st.scan_set.erase(id);
    if (st.pred == id) st.pred.reset();
    if (st.succ == id) st.succ.reset();
  }

  std::uint64_t dropped = 0;
  if (auto bit = net.buffers.find(id); bit != net.buffers.end()) {
    dropped += bit->second.size();
    net.buffers.erase(bit);
  }
  // Also drop in-flight messages from the departed node or carrying its id;
  // either would re-introduce the id after the purge.
  for (auto& [rcpt, msgs] : net.buffers) {
    auto removed = std::erase_if(msgs, [id](const Message& m) {
      return m.sender == id || m.extra == id;
    });
    dropped += removed;
  }
  std::erase_if(net.buffers,
                [](const auto& kv) { return kv.second.empty(); });
  return dropped;
}

RunResult run(NetworkState& net, const RunOptions& opts) {
  RunResult res;
  std::vector<ChurnEvent> events = opts.events;
  std::stable_sort(events.begin(), events.end(),
                   [](const ChurnEvent& a, const ChurnEvent& b) {
                     return a.at_round < b.at_round;
                   });
  std::size_t next_event = 0;
  std::uint64_t executed = 0;

  while (true) {
    while (next_event < events.size() &&
           events[next_event].at_round <= net.round) {
      const ChurnEvent& e = events[next_event];
      if (e.kind == ChurnEvent::Kind::join) {
        if (!e.contact) throw EventError("join event requires a contact");
        apply_join(net, e.id, *e.contact);
      } else {
        res.dropped += apply_leave(net, e.id);
      }
      ++next_event;
    }

    // Stop predicates and first-round markers only start counting once all
    // scheduled churn has happened, so runs with events measure recovery.
    if (next_event == events.size()) {
      const bool valid_now = is_valid(net);
      const bool one_heap_now = num_heaps(net) == 1;
      const bool legal_now = is_legal(net);
      if (!res.first_valid && valid_now) res.first_valid = executed;
      if (!res.first_one_heap && one_heap_now) res.first_one_heap = executed;
      if (!res.first_legal && legal_now) {
        res.first_legal = executed;
        res.work_at_legal = res.work;
      }
      bool stop = false;
      switch (opts.stop_when) {
        case StopWhen::legal: stop = legal_now; break;
        case StopWhen::valid: stop = valid_now; break;
        case StopWhen::one_heap: stop = one_heap_now; break;
        case StopWhen::never: stop = false; break;
      }
      if (stop) {
        res.stopped_at = executed;
        break;
      }
    }

    if (executed == opts.max_rounds) break;
    TraceRecord rec = step_round(net, opts.step, &res.work, &res.dropped);
    if (res.first_legal && executed >= *res.first_legal + 2) {
      for (const auto& [id, c] : rec.per_node_sent) {
        res.maintenance_max_sent = std::max(res.maintenance_max_sent, c);
      }
      for (const auto& [id, c] : rec.per_node_received) {
        res.maintenance_max_received = std::max(res.maintenance_max_received, c);
      }
    }
    res.trace.push_back(std::move(rec));
    ++executed;
  }
  return res;
}

}  // namespace cliquesim
