#include "cliquesim/protocol.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace cliquesim {

namespace {

std::optional<NodeId> smallest_larger(const NodeState& st) {
  std::optional<NodeId> best;
  for (NodeId v : st.neighbors.items()) {
    if (v > st.id && (!best || v < *best)) best = v;
  }
  return best;
}

std::optional<NodeId> neighborhood_max(const NodeState& st) {
  std::optional<NodeId> best;
  for (NodeId v : st.neighbors.items()) {
    if (!best || v > *best) best = v;
  }
  return best;
}

void set_status(NodeState& st, Status next, Outbox& out) {
  // Status changes ripple down the successor chain, but only actual
  // transitions are announced; re-sending every round would snowball.
  if (st.status == next) return;
  st.status = next;
  if (st.succ) {
    out.push_back(make_message(next == Status::active ? MessageType::activate
                                                      : MessageType::deactivate,
                               st.id, *st.succ));
  }
}

}  // namespace

void forward_to_pred(NodeState& st, Outbox& out) {
  if (st.status == Status::inactive) return;
  if (!st.pred || st.neighbors.empty()) return;
  out.push_back(make_message(MessageType::forward_from_successor, st.id,
                             *st.pred, st.neighbors.head()));
  st.neighbors.advance();
}

void check_if_head(NodeState& st, Outbox& out) {
  if (!st.pred || *st.pred < st.id) {
    st.pred = smallest_larger(st);
    if (st.pred) {
      out.push_back(make_message(MessageType::pred_request, st.id, *st.pred));
      st.status = Status::inactive;
    } else if (!st.neighbors.empty()) {
      // No larger id known: act as head and probe the known ids one per round.
      NodeId target = st.neighbors.head();
      out.push_back(make_message(MessageType::scan, st.id, target));
      st.remember_downstream(target, Place::tail);
      st.neighbors.advance();
    }
  } else {
    out.push_back(make_message(MessageType::pred_request, st.id, *st.pred));
  }
}

void forward_to_suc(NodeState& st, Outbox& out) {
  if (!st.succ) return;
  if (*st.succ >= st.id) {
    st.succ.reset();
    return;
  }
  std::optional<NodeId> payload;
  if (!st.downstream.empty()) {
    payload = st.downstream.head();
    st.downstream.advance();
  }
  out.push_back(make_message(MessageType::forward_from_predecessor, st.id,
                             *st.succ, payload));
}

void forward_max(NodeState& st, Outbox& out) {
  if (st.scan_set.empty()) return;
  std::optional<NodeId> max_known = neighborhood_max(st);
  for (NodeId u : st.scan_set) st.remember_neighbor(u, Place::tail);
  NodeId max_scanned = *st.scan_set.rbegin();
  if ((!max_known || max_scanned > *max_known) && st.pred) {
    out.push_back(make_message(MessageType::forward_head, st.id, *st.pred,
                               max_scanned));
    st.scan_set.erase(max_scanned);
    max_known = max_scanned;
  }
  if (!max_known) return;  // nothing to acknowledge with yet; retry next round
  for (NodeId u : st.scan_set) {
    out.push_back(make_message(MessageType::scanack, st.id, u, *max_known));
  }
  st.scan_set.clear();
}

void process_message(NodeState& st, const Message& m, Outbox& out,
                     const ProtocolConfig& cfg) {
  assert(m.recipient == st.id);
  switch (m.type) {
    case MessageType::pred_request:
      if (m.sender < st.id) {
        st.remember_neighbor(m.sender, Place::tail);
        if (st.succ) {
          NodeId grandson = std::min(m.sender, *st.succ);
          st.succ = std::max(m.sender, *st.succ);
          out.push_back(make_message(MessageType::pred_accept, st.id, *st.succ));
          out.push_back(make_message(MessageType::new_predecessor, st.id,
                                     grandson, *st.succ));
        } else {
          st.succ = m.sender;
          out.push_back(make_message(MessageType::pred_accept, st.id, *st.succ));
        }
      }
      break;

    case MessageType::pred_accept:
      if (st.pred && m.sender == *st.pred) {
        set_status(st, Status::active, out);
      } else {
        out.push_back(make_message(MessageType::delete_successor, st.id, m.sender));
      }
      break;

    case MessageType::new_predecessor:
      if (st.pred && m.sender == *st.pred && m.extra && *m.extra > st.id &&
          *m.extra < *st.pred) {
        st.pred = *m.extra;
        out.push_back(make_message(MessageType::pred_request, st.id, *st.pred));
        set_status(st, Status::inactive, out);
      }
      break;

    case MessageType::deactivate:
      if (st.pred && m.sender == *st.pred) {
        set_status(st, Status::inactive, out);
      } else {
        out.push_back(make_message(MessageType::delete_successor, st.id, m.sender));
      }
      break;

    case MessageType::activate:
      if (st.pred && m.sender == *st.pred) {
        set_status(st, Status::active, out);
      } else {
        out.push_back(make_message(MessageType::delete_successor, st.id, m.sender));
      }
      break;

    case MessageType::forward_from_successor:
      if (st.succ && m.sender == *st.succ && m.extra) {
        // Head placement: a relayed id is itself relayed next, so it crosses
        // the whole chain without queueing behind the local round-robin.
        st.remember_neighbor(*m.extra, Place::head);
      }
      break;

    case MessageType::forward_from_predecessor:
      if (st.pred && m.sender == *st.pred) {
        if (m.extra) {
          st.remember_neighbor(*m.extra, Place::tail);
          // The relay queue accepts the node's own id: nodes further down
          // still need it, and dropping it here would end its journey.
          st.downstream.insert(*m.extra, Place::head);
        }
      } else {
        out.push_back(make_message(MessageType::delete_successor, st.id, m.sender));
      }
      break;

    case MessageType::forward_head:
      if (st.succ && m.sender == *st.succ) {
        std::optional<NodeId> learned =
            cfg.ack_insert == ProtocolConfig::AckInsert::payload
                ? m.extra
                : std::optional<NodeId>(m.sender);
        if (learned) {
          if (!st.neighbors.contains(*learned)) st.remember_scanned(*learned);
          st.remember_neighbor(*learned, Place::tail);
        }
      }
      break;

    case MessageType::scan:
      st.remember_scanned(m.sender);
      break;

    case MessageType::scanack: {
      std::optional<NodeId> learned =
          cfg.ack_insert == ProtocolConfig::AckInsert::payload
              ? m.extra
              : std::optional<NodeId>(m.sender);
      if (learned && !st.neighbors.contains(*learned)) {
        st.remember_scanned(*learned);
      }
      break;
    }

    case MessageType::delete_successor:
      if (st.succ && m.sender == *st.succ) st.succ.reset();
      break;
  }
}

namespace {

void periodic_actions(NodeState& st, Outbox& out) {
  forward_to_pred(st, out);
  check_if_head(st, out);
  forward_to_suc(st, out);
  forward_max(st, out);
}

}  // namespace

void node_round(NodeState& st, std::vector<Message> inbox, Outbox& out,
                const ProtocolConfig& cfg) {
  if (cfg.inbox_order == ProtocolConfig::InboxOrder::canonical) {
    std::sort(inbox.begin(), inbox.end(), canonical_less);
  }
  if (cfg.action_order == ProtocolConfig::ActionOrder::periodic_first) {
    periodic_actions(st, out);
    for (const Message& m : inbox) process_message(st, m, out, cfg);
  } else {
    for (const Message& m : inbox) process_message(st, m, out, cfg);
    periodic_actions(st, out);
  }
}

}  // namespace cliquesim
