#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace cliquesim {

/// Node identifier. Identifiers are positive integers; ordering drives the
/// whole protocol (predecessors are always larger, successors smaller).
struct NodeId {
  std::uint64_t value = 0;

  auto operator<=>(const NodeId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, NodeId id) {
  return os << id.value;
}

inline std::string to_string(NodeId id) { return std::to_string(id.value); }

/// A node only participates in the forwarding flow while active. Fresh and
/// re-parented nodes sit inactive until their predecessor confirms them.
enum class Status : std::uint8_t { inactive, active };

inline const char* to_string(Status s) {
  return s == Status::active ? "active" : "inactive";
}

}  // namespace cliquesim

template <>
struct std::hash<cliquesim::NodeId> {
  std::size_t operator()(const cliquesim::NodeId& id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};
