#include "cliquesim/topology.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "cliquesim/errors.hpp"
#include "cliquesim/rng.hpp"
#include "cliquesim/verify.hpp"

namespace cliquesim {

std::string to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::line: return "line";
    case TopologyKind::ring: return "ring";
    case TopologyKind::star_in: return "star-in";
    case TopologyKind::star_out: return "star-out";
    case TopologyKind::random_tree: return "random-tree";
    case TopologyKind::random_connected: return "random-connected";
    case TopologyKind::heap_forest: return "heap-forest";
    case TopologyKind::clique_legal: return "clique-legal";
    case TopologyKind::adversarial: return "adversarial";
  }
  return "?";
}

TopologyKind parse_topology_kind(const std::string& name) {
  for (TopologyKind k :
       {TopologyKind::line, TopologyKind::ring, TopologyKind::star_in,
        TopologyKind::star_out, TopologyKind::random_tree,
        TopologyKind::random_connected, TopologyKind::heap_forest,
        TopologyKind::clique_legal, TopologyKind::adversarial}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown topology kind: " + name);
}

std::string to_string(IdScheme s) {
  return s == IdScheme::dense ? "dense" : "sparse-random";
}

IdScheme parse_id_scheme(const std::string& name) {
  if (name == "dense") return IdScheme::dense;
  if (name == "sparse-random") return IdScheme::sparse_random;
  throw ConfigError("unknown id scheme: " + name);
}

namespace {

std::vector<NodeId> make_ids(const InitialStateSpec& spec, Rng& rng) {
  std::vector<NodeId> ids;
  ids.reserve(spec.n);
  if (spec.id_scheme == IdScheme::dense) {
    for (std::size_t i = 1; i <= spec.n; ++i) ids.push_back(NodeId{i});
  } else {
    std::set<NodeId> drawn;
    while (drawn.size() < spec.n) {
      drawn.insert(NodeId{rng.below(1'000'000'000) + 1});
    }
    ids.assign(drawn.begin(), drawn.end());
  }
  return ids;
}

NetworkState with_nodes(const std::vector<NodeId>& ids) {
  NetworkState net;
  for (NodeId id : ids) {
    NodeState st;
    st.id = id;
    net.nodes.emplace(id, std::move(st));
  }
  return net;
}

NodeId pick_other(const std::vector<NodeId>& ids, NodeId self, Rng& rng) {
  for (;;) {
    NodeId v = ids[rng.below(ids.size())];
    if (v != self) return v;
  }
}

// Some kinds of initial knowledge are dropped before being recorded
// anywhere: a downward p link is discarded by check_if_head, an s link whose
// target has a different predecessor is deleted on request, and an L entry
// of a node that never gains a successor is inert. Only N and S entries and
// upward p links are guaranteed to survive, so connectivity must be ensured
// over exactly those edges or a component can end up unreachable forever.
std::map<NodeId, std::vector<NodeId>> durable_adjacency(
    const NetworkState& net) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& [id, st] : net.nodes) {
    auto add = [&](NodeId v) {
      if (net.nodes.count(v) == 0 || v == id) return;
      adj[id].push_back(v);
      adj[v].push_back(id);
    };
    for (NodeId v : st.neighbors.items()) add(v);
    for (NodeId v : st.scan_set) add(v);
    if (st.pred && *st.pred > id) add(*st.pred);
  }
  return adj;
}

// Adds neighbor edges until the durable knowledge graph is one weak
// component: one edge from a member of each extra component to a member of
// the first.
void connect_components(NetworkState& net, const std::vector<NodeId>& ids,
                        Rng& rng) {
  for (;;) {
    std::map<NodeId, std::vector<NodeId>> adj = durable_adjacency(net);
    std::map<NodeId, std::size_t> comp;
    std::size_t n_comp = 0;
    for (const auto& [id, st] : net.nodes) {
      if (comp.count(id) != 0) continue;
      std::vector<NodeId> queue{id};
      comp[id] = n_comp;
      while (!queue.empty()) {
        NodeId cur = queue.back();
        queue.pop_back();
        for (NodeId v : adj[cur]) {
          if (comp.emplace(v, n_comp).second) queue.push_back(v);
        }
      }
      ++n_comp;
    }
    if (n_comp <= 1) return;
    // Pick one random member per component and chain them together.
    std::vector<std::vector<NodeId>> members(n_comp);
    for (NodeId id : ids) members[comp.at(id)].push_back(id);
    for (std::size_t c = 1; c < n_comp; ++c) {
      NodeId from = members[c][rng.below(members[c].size())];
      NodeId to = members[0][rng.below(members[0].size())];
      net.nodes.at(from).remember_neighbor(to, Place::tail);
    }
  }
}

NetworkState generate_line(const std::vector<NodeId>& ids, bool ring) {
  NetworkState net = with_nodes(ids);
  const std::size_t n = ids.size();
  for (std::size_t i = 0; i < n; ++i) {
    NodeState& st = net.nodes.at(ids[i]);
    std::vector<NodeId> near;
    if (i > 0) near.push_back(ids[i - 1]);
    if (i + 1 < n) near.push_back(ids[i + 1]);
    if (ring && n > 1) {
      if (i == 0) near.push_back(ids[n - 1]);
      if (i == n - 1) near.push_back(ids[0]);
    }
    std::sort(near.begin(), near.end());
    for (NodeId v : near) st.remember_neighbor(v, Place::tail);
  }
  return net;
}

NetworkState generate_star(const std::vector<NodeId>& ids, bool leaves_know,
                           Rng& rng) {
  NetworkState net = with_nodes(ids);
  const NodeId center = ids[rng.below(ids.size())];
  for (NodeId id : ids) {
    if (id == center) continue;
    if (leaves_know) {
      net.nodes.at(id).remember_neighbor(center, Place::tail);
    } else {
      net.nodes.at(center).remember_neighbor(id, Place::tail);
    }
  }
  return net;
}

NetworkState generate_random_tree(const std::vector<NodeId>& ids, Rng& rng,
                                  std::size_t extra_edges) {
  NetworkState net = with_nodes(ids);
  std::vector<NodeId> order = ids;
  rng.shuffle(order);
  for (std::size_t i = 1; i < order.size(); ++i) {
    NodeId parent = order[rng.below(i)];
    NodeId child = order[i];
    if (rng.coin()) {
      net.nodes.at(parent).remember_neighbor(child, Place::tail);
    } else {
      net.nodes.at(child).remember_neighbor(parent, Place::tail);
    }
  }
  const std::size_t n = ids.size();
  const std::size_t capacity = n * (n - 1);
  std::size_t present = 0;
  for (const auto& [id, st] : net.nodes) present += st.neighbors.size();
  if (extra_edges > capacity - present) {
    throw ConfigError("extra_edges exceeds the number of available pairs");
  }
  for (std::size_t added = 0; added < extra_edges;) {
    NodeId u = ids[rng.below(n)];
    NodeId v = pick_other(ids, u, rng);
    if (net.nodes.at(u).remember_neighbor(v, Place::tail)) ++added;
  }
  return net;
}

NetworkState generate_heap_forest(const std::vector<NodeId>& ids,
                                  std::size_t num_heaps, Rng& rng) {
  NetworkState net = with_nodes(ids);
  std::vector<NodeId> order = ids;
  rng.shuffle(order);
  // Deal the shuffled ids round-robin; each group becomes one heap.
  std::vector<std::vector<NodeId>> groups(num_heaps);
  for (std::size_t i = 0; i < order.size(); ++i) {
    groups[i % num_heaps].push_back(order[i]);
  }
  for (auto& group : groups) {
    std::sort(group.begin(), group.end());
    for (std::size_t i = 0; i + 1 < group.size(); ++i) {
      // Parent: uniformly among strictly larger members of the same group.
      NodeId parent = group[i + 1 + rng.below(group.size() - i - 1)];
      NodeState& st = net.nodes.at(group[i]);
      st.pred = parent;
      st.remember_neighbor(parent, Place::tail);
    }
  }
  for (std::size_t g = 1; g < groups.size(); ++g) {
    NodeId from = groups[g][rng.below(groups[g].size())];
    NodeId to = groups[g - 1][rng.below(groups[g - 1].size())];
    net.nodes.at(from).remember_neighbor(to, Place::tail);
  }
  return net;
}

NetworkState generate_clique_legal(const std::vector<NodeId>& ids) {
  NetworkState net = with_nodes(ids);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    NodeState& st = net.nodes.at(ids[i]);
    for (NodeId v : ids) st.remember_neighbor(v, Place::tail);
    if (i + 1 < ids.size()) st.pred = ids[i + 1];
    if (i > 0) st.succ = ids[i - 1];
    st.status = Status::active;
  }
  return net;
}

NetworkState generate_adversarial(const std::vector<NodeId>& ids, Rng& rng) {
  NetworkState net = with_nodes(ids);
  const std::size_t n = ids.size();
  for (NodeId id : ids) {
    NodeState& st = net.nodes.at(id);
    if (n > 1 && rng.coin()) st.pred = pick_other(ids, id, rng);
    if (n > 1 && rng.coin()) st.succ = pick_other(ids, id, rng);
    st.status = rng.coin() ? Status::active : Status::inactive;
    if (n > 1) {
      for (std::size_t k = rng.below(n); k > 0; --k) {
        st.remember_neighbor(pick_other(ids, id, rng), Place::tail);
      }
      for (std::size_t k = rng.below(n); k > 0; --k) {
        st.remember_downstream(pick_other(ids, id, rng), Place::tail);
      }
      for (std::size_t k = rng.below(n); k > 0; --k) {
        st.remember_scanned(pick_other(ids, id, rng));
      }
    }
  }
  connect_components(net, ids, rng);
  return net;
}

}  // namespace

NetworkState generate(const InitialStateSpec& spec) {
  if (spec.n < 1) throw ConfigError("topology requires n >= 1");
  if (spec.kind == TopologyKind::heap_forest &&
      (spec.num_heaps < 1 || spec.num_heaps > spec.n)) {
    throw ConfigError("heap-forest requires 1 <= num_heaps <= n");
  }
  if (spec.kind != TopologyKind::random_connected && spec.extra_edges != 0) {
    throw ConfigError("extra_edges only applies to random-connected");
  }
  Rng rng(Rng::derive(spec.seed, static_cast<std::uint64_t>(spec.kind),
                      spec.n, static_cast<std::uint64_t>(spec.id_scheme)));
  const std::vector<NodeId> ids = make_ids(spec, rng);
  switch (spec.kind) {
    case TopologyKind::line:
      return generate_line(ids, false);
    case TopologyKind::ring:
      return generate_line(ids, true);
    case TopologyKind::star_in:
      return generate_star(ids, true, rng);
    case TopologyKind::star_out:
      return generate_star(ids, false, rng);
    case TopologyKind::random_tree:
      return generate_random_tree(ids, rng, 0);
    case TopologyKind::random_connected:
      return generate_random_tree(ids, rng, spec.extra_edges);
    case TopologyKind::heap_forest:
      return generate_heap_forest(ids, spec.num_heaps, rng);
    case TopologyKind::clique_legal:
      return generate_clique_legal(ids);
    case TopologyKind::adversarial:
      return generate_adversarial(ids, rng);
  }
  throw ConfigError("unknown topology kind");
}

}  // namespace cliquesim
