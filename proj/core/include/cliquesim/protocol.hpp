#pragma once

#include <vector>

#include "cliquesim/message.hpp"
#include "cliquesim/node_state.hpp"

namespace cliquesim {

/// Knobs for the per-round node logic. Defaults are the reference behavior;
/// the alternatives exist so tests can show the protocol's conclusions do not
/// depend on them.
struct ProtocolConfig {
  /// Which id the forward-head / scanack handlers learn: the payload the
  /// message carries (default) or the sender address.
  enum class AckInsert { payload, sender };
  AckInsert ack_insert = AckInsert::payload;

  /// Whether the periodic actions run before or after the inbox is processed.
  enum class ActionOrder { periodic_first, receive_first };
  ActionOrder action_order = ActionOrder::periodic_first;

  /// Whether node_round sorts the inbox into canonical order or processes it
  /// exactly as given (used by the message-order fuzzer).
  enum class InboxOrder { canonical, as_given };
  InboxOrder inbox_order = InboxOrder::canonical;
};

/// Periodic action: forward the next known id to the predecessor.
/// Runs only while the node is active, has a predecessor and knows at least
/// one id; the neighbor cursor advances one step per emission.
void forward_to_pred(NodeState& st, Outbox& out);

/// Periodic action: validate the predecessor link.
/// An absent or smaller-than-self predecessor is recomputed as the smallest
/// known larger id; finding one triggers a pred-request and deactivation.
/// A node with no larger known id is a head: it scans one known id per round
/// (round-robin) and queues the scanned id for downstream relay. A node whose
/// predecessor is already valid re-requests it every round.
void check_if_head(NodeState& st, Outbox& out);

/// Periodic action: relay one queued id to the successor.
/// A successor at least as large as the node itself is stale and dropped.
/// With an empty relay queue the message is still sent, just without a
/// payload; that keeps a node with a mistaken successor link visible to the
/// supposed successor, which answers delete-successor.
void forward_to_suc(NodeState& st, Outbox& out);

/// Periodic action: fold scanned ids into the neighborhood and propagate the
/// largest known id. If the scan set tops the previous neighborhood maximum
/// and a predecessor exists, the new maximum travels up via forward-head;
/// every other scanned id gets a scanack naming the neighborhood maximum,
/// in ascending id order. If no maximum is known yet (empty neighborhood,
/// no predecessor), the scan set is kept for the next round.
void forward_max(NodeState& st, Outbox& out);

/// Dispatch one received message.
void process_message(NodeState& st, const Message& m, Outbox& out,
                     const ProtocolConfig& cfg = {});

/// One full round for a single node: the four periodic actions plus the
/// round's inbox, ordered per cfg. Deterministic; reads and writes nothing
/// outside st / out.
void node_round(NodeState& st, std::vector<Message> inbox, Outbox& out,
                const ProtocolConfig& cfg = {});

}  // namespace cliquesim
