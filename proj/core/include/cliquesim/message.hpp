#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "cliquesim/ids.hpp"

namespace cliquesim {

/// The eleven message types of the protocol. Enum order is the canonical tag
/// order used when sorting a round's inbox.
enum class MessageType : std::uint8_t {
  pred_request,
  pred_accept,
  new_predecessor,
  deactivate,
  activate,
  forward_from_successor,
  forward_from_predecessor,
  forward_head,
  scan,
  scanack,
  delete_successor,
};

inline constexpr std::size_t kMessageTypeCount = 11;

constexpr std::array<std::string_view, kMessageTypeCount> kMessageTypeNames = {
    "pred-request",     "pred-accept", "new-predecessor",
    "deactivate",       "activate",    "forward-from-successor",
    "forward-from-predecessor",        "forward-head",
    "scan",             "scanack",     "delete-successor",
};

constexpr std::string_view to_string(MessageType t) {
  return kMessageTypeNames[static_cast<std::size_t>(t)];
}

/// Whether this type carries a payload id in addition to the sender id.
/// forward-from-predecessor payloads are optional: a node with a successor
/// but an empty relay list still emits the message without a payload, so the
/// successor side can detect stale links.
constexpr bool carries_extra(MessageType t) {
  switch (t) {
    case MessageType::new_predecessor:
    case MessageType::forward_from_successor:
    case MessageType::forward_from_predecessor:
    case MessageType::forward_head:
    case MessageType::scanack:
      return true;
    default:
      return false;
  }
}

struct Message {
  MessageType type;
  NodeId sender;
  std::optional<NodeId> extra;  // present only for types per carries_extra
  NodeId recipient;             // routing only, never read by handlers

  bool operator==(const Message&) const = default;

  /// Number of node addresses carried: the sender plus the payload if any.
  std::uint64_t id_count() const { return extra ? 2u : 1u; }
};

/// Canonical processing order for one round's inbox: type tag, then sender,
/// then payload. Total enough that equal keys mean identical messages.
inline bool canonical_less(const Message& a, const Message& b) {
  return std::tie(a.type, a.sender, a.extra) < std::tie(b.type, b.sender, b.extra);
}

using Outbox = std::vector<Message>;

inline Message make_message(MessageType t, NodeId sender, NodeId recipient,
                            std::optional<NodeId> extra = std::nullopt) {
  return Message{t, sender, extra, recipient};
}

}  // namespace cliquesim
