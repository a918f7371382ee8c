#pragma once

#include <iosfwd>
#include <string>

#include "cliquesim/network.hpp"

namespace cliquesim {

// JSON document, lossless including cursor positions, statuses and buffered
// messages. Missing p/s serialize as the string "absent"; circular lists as
// {"items": [...], "head_index": 0} with items rotated so the cursor is
// first; scan sets as sorted arrays.
std::string save_state(const NetworkState& net);
void save_state(std::ostream& os, const NetworkState& net);

// Inverse of save_state. Throws ParseError on malformed documents and on any
// id that does not belong to the node set ("false identifier").
NetworkState load_state(const std::string& text);
NetworkState load_state(std::istream& is);

}  // namespace cliquesim
