#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <vector>

#include "cliquesim/ids.hpp"

namespace cliquesim {

/// Where an id is placed relative to the cursor when inserted.
enum class Place { head, tail };

/// Duplicate-free circular list with a cursor. The element under the cursor
/// is the next one handed out by the round-robin forwarding actions.
///
/// Stored normalized: items_ is the cycle in forwarding order, cursor always
/// at index 0. advance() rotates by one; a head insert lands in front of the
/// cursor (it is forwarded next), a tail insert lands at the back (it is
/// forwarded last in the current sweep). Removing the element under the
/// cursor moves the cursor to the next surviving element.
class CircularList {
 public:
  CircularList() = default;

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  /// Element under the cursor. Precondition: !empty().
  NodeId head() const {
    assert(!items_.empty());
    return items_.front();
  }

  void advance() {
    if (items_.size() < 2) return;
    std::rotate(items_.begin(), items_.begin() + 1, items_.end());
  }

  bool contains(NodeId id) const {
    return std::find(items_.begin(), items_.end(), id) != items_.end();
  }

  /// Membership-checked insert: an id already present stays where it is and
  /// the call reports false.
  bool insert(NodeId id, Place place) {
    if (contains(id)) return false;
    if (place == Place::head) {
      items_.insert(items_.begin(), id);
    } else {
      items_.push_back(id);
    }
    return true;
  }

  bool erase(NodeId id) {
    auto it = std::find(items_.begin(), items_.end(), id);
    if (it == items_.end()) return false;
    items_.erase(it);
    return true;
  }

  const std::vector<NodeId>& items() const { return items_; }

  /// Rebuild from a serialized (items, head_index) pair.
  static CircularList from_items(std::vector<NodeId> items,
                                 std::size_t head_index) {
    CircularList l;
    l.items_ = std::move(items);
    if (!l.items_.empty()) {
      head_index %= l.items_.size();
      std::rotate(l.items_.begin(),
                  l.items_.begin() + static_cast<std::ptrdiff_t>(head_index),
                  l.items_.end());
    }
    return l;
  }

  bool operator==(const CircularList&) const = default;

 private:
  std::vector<NodeId> items_;
};

}  // namespace cliquesim
