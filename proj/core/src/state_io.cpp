#include "cliquesim/state_io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "cliquesim/errors.hpp"

#include "json.hpp"

namespace cliquesim {

namespace {

using Json = nlohmann::ordered_json;

Json list_to_json(const CircularList& list) {
  Json items = Json::array();
  for (NodeId v : list.items()) items.push_back(v.value);
  return Json{{"items", std::move(items)}, {"head_index", 0}};
}

Json opt_to_json(const std::optional<NodeId>& v) {
  if (!v) return "absent";
  return v->value;
}

MessageType parse_type(const std::string& name) {
  for (std::size_t i = 0; i < kMessageTypeCount; ++i) {
    if (name == kMessageTypeNames[i]) return static_cast<MessageType>(i);
  }
  throw ParseError("unknown message type: " + name);
}

class Loader {
 public:
  explicit Loader(const Json& doc) : doc_(doc) {}

  NetworkState load() {
    NetworkState net;
    net.round = field(doc_, "round").get<std::uint64_t>();
    for (const Json& jn : field(doc_, "nodes")) {
      NodeId id{field(jn, "id").get<std::uint64_t>()};
      if (!known_.insert(id).second) {
        throw ParseError("duplicate node " + to_string(id));
      }
    }
    if (known_.empty()) throw ParseError("empty node set");
    for (const Json& jn : field(doc_, "nodes")) {
      NodeState st = load_node(jn);
      net.nodes.emplace(st.id, std::move(st));
    }
    if (doc_.contains("buffers")) {
      for (const Json& jb : doc_["buffers"]) {
        NodeId rcpt = checked_id(field(jb, "recipient"));
        std::vector<Message> msgs;
        for (const Json& jm : field(jb, "messages")) msgs.push_back(load_message(jm, rcpt));
        if (msgs.empty()) continue;
        if (!net.buffers.emplace(rcpt, std::move(msgs)).second) {
          throw ParseError("duplicate buffer for " + to_string(rcpt));
        }
      }
    }
    return net;
  }

 private:
  static const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
      throw ParseError(std::string("missing field \"") + name + '"');
    }
    return *it;
  }

  NodeId checked_id(const Json& j) {
    if (!j.is_number_unsigned()) throw ParseError("id must be unsigned");
    NodeId id{j.get<std::uint64_t>()};
    if (known_.count(id) == 0) {
      throw ParseError("false identifier: " + to_string(id));
    }
    return id;
  }

  std::optional<NodeId> checked_opt(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "absent") return std::nullopt;
    return checked_id(j);
  }

  CircularList load_list(const Json& j, NodeId self, const char* what,
                         bool allow_self) {
    std::vector<NodeId> items;
    std::set<NodeId> seen;
    for (const Json& je : field(j, "items")) {
      NodeId v = checked_id(je);
      if (v == self && !allow_self) {
        throw ParseError(std::string(what) + " of node " + to_string(self) +
                         " contains its own id");
      }
      if (!seen.insert(v).second) {
        throw ParseError(std::string(what) + " of node " + to_string(self) +
                         " contains " + to_string(v) + " twice");
      }
      items.push_back(v);
    }
    const auto head = field(j, "head_index").get<std::size_t>();
    if (!items.empty() && head >= items.size()) {
      throw ParseError("head_index out of range");
    }
    return CircularList::from_items(std::move(items), head);
  }

  NodeState load_node(const Json& jn) {
    NodeState st;
    st.id = checked_id(field(jn, "id"));
    st.pred = checked_opt(field(jn, "pred"));
    st.succ = checked_opt(field(jn, "succ"));
    if (st.pred == st.id || st.succ == st.id) {
      throw ParseError("node " + to_string(st.id) + " links to itself");
    }
    const std::string status = field(jn, "status").get<std::string>();
    if (status == "active") {
      st.status = Status::active;
    } else if (status == "inactive") {
      st.status = Status::inactive;
    } else {
      throw ParseError("unknown status: " + status);
    }
    st.neighbors =
        load_list(field(jn, "neighbors"), st.id, "neighbors", false);
    st.downstream =
        load_list(field(jn, "downstream"), st.id, "downstream", true);
    for (const Json& je : field(jn, "scanned")) {
      NodeId v = checked_id(je);
      if (v == st.id) {
        throw ParseError("scanned of node " + to_string(st.id) +
                         " contains its own id");
      }
      st.scan_set.insert(v);
    }
    return st;
  }

  Message load_message(const Json& jm, NodeId rcpt) {
    Message m;
    m.type = parse_type(field(jm, "type").get<std::string>());
    m.sender = checked_id(field(jm, "sender"));
    m.extra = checked_opt(field(jm, "extra"));
    m.recipient = rcpt;
    if (m.extra && !carries_extra(m.type)) {
      throw ParseError("message type " +
                       std::string(kMessageTypeNames[static_cast<std::size_t>(m.type)]) +
                       " does not carry an extra id");
    }
    return m;
  }

  const Json& doc_;
  std::set<NodeId> known_;
};

}  // namespace

std::string save_state(const NetworkState& net) {
  Json doc;
  doc["round"] = net.round;
  Json nodes = Json::array();
  for (const auto& [id, st] : net.nodes) {
    Json jn;
    jn["id"] = id.value;
    jn["pred"] = opt_to_json(st.pred);
    jn["succ"] = opt_to_json(st.succ);
    jn["status"] = to_string(st.status);
    jn["neighbors"] = list_to_json(st.neighbors);
    jn["downstream"] = list_to_json(st.downstream);
    Json scanned = Json::array();
    for (NodeId v : st.scan_set) scanned.push_back(v.value);
    jn["scanned"] = std::move(scanned);
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);
  Json buffers = Json::array();
  for (const auto& [rcpt, msgs] : net.buffers) {
    if (msgs.empty()) continue;
    Json jb;
    jb["recipient"] = rcpt.value;
    Json jmsgs = Json::array();
    for (const Message& m : msgs) {
      Json jm;
      jm["type"] = std::string(kMessageTypeNames[static_cast<std::size_t>(m.type)]);
      jm["sender"] = m.sender.value;
      jm["extra"] = opt_to_json(m.extra);
      jmsgs.push_back(std::move(jm));
    }
    jb["messages"] = std::move(jmsgs);
    buffers.push_back(std::move(jb));
  }
  doc["buffers"] = std::move(buffers);
  return doc.dump(2) + "\n";
}

void save_state(std::ostream& os, const NetworkState& net) {
  os << save_state(net);
}

NetworkState load_state(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    return Loader(doc).load();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

NetworkState load_state(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return load_state(ss.str());
}

}  // namespace cliquesim
