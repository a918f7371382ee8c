#include "cliquesim/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "cliquesim/errors.hpp"

namespace cliquesim {

namespace {

bool is_head_like(const NodeState& st) {
  return !st.pred || *st.pred <= st.id;
}

struct Dsu {
  std::vector<std::size_t> parent;

  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_valid(const NetworkState& net) {
  for (const auto& [id, st] : net.nodes) {
    if (st.pred && *st.pred <= id) return false;
    if (st.succ) {
      if (*st.succ >= id) return false;
      auto it = net.nodes.find(*st.succ);
      if (it == net.nodes.end() || it->second.pred != id) return false;
    }
  }
  return true;
}

bool is_legal(const NetworkState& net) {
  if (net.nodes.empty()) return false;
  const std::size_t n = net.nodes.size();
  for (const auto& [id, st] : net.nodes) {
    if (st.neighbors.size() != n - 1) return false;
  }
  const NodeId max_id = net.nodes.rbegin()->first;
  for (const auto& [id, st] : net.nodes) {
    if (id == max_id) continue;
    if (!st.pred || *st.pred <= id) return false;
    auto pit = net.nodes.find(*st.pred);
    if (pit == net.nodes.end() || pit->second.succ != id) return false;
  }
  // Sizes match; confirm the lists really hold exactly the other live ids.
  for (const auto& [id, st] : net.nodes) {
    std::unordered_set<NodeId> seen;
    for (NodeId w : st.neighbors.items()) {
      if (w == id || net.nodes.count(w) == 0 || !seen.insert(w).second) {
        return false;
      }
    }
  }
  return true;
}

HeapDecomposition heap_decomposition(const NetworkState& net) {
  HeapDecomposition d;
  std::map<NodeId, NodeId> root;
  for (const auto& [start, st0] : net.nodes) {
    std::vector<NodeId> path;
    NodeId cur = start;
    for (;;) {
      if (auto it = root.find(cur); it != root.end()) {
        cur = it->second;
        break;
      }
      const NodeState& st = net.nodes.at(cur);
      if (is_head_like(st)) break;
      auto nit = net.nodes.find(*st.pred);
      if (nit == net.nodes.end()) {
        throw Error("invalid p-forest: unknown predecessor " +
                    to_string(*st.pred) + " of node " + to_string(cur));
      }
      path.push_back(cur);
      cur = *st.pred;
    }
    root.emplace(cur, cur);
    for (NodeId u : path) root.emplace(u, cur);
  }

  std::map<NodeId, std::size_t> head_index;
  for (const auto& [v, r] : root) {
    if (v == r) {
      const std::size_t idx = head_index.size();
      head_index.emplace(v, idx);
      d.heads.insert(v);
    }
  }
  for (const auto& [v, r] : root) {
    const std::size_t idx = head_index.at(r);
    d.assignment.emplace(v, idx);
    d.sizes[idx]++;
  }
  return d;
}

std::size_t num_heaps(const NetworkState& net) {
  // Every p-chain strictly increases ids, so components correspond one-to-one
  // to nodes satisfying the head condition.
  std::size_t heads = 0;
  for (const auto& [id, st] : net.nodes) {
    if (is_head_like(st)) ++heads;
  }
  return heads;
}

bool is_linearized_wrt(const NetworkState& net, NodeId u) {
  if (net.nodes.count(u) == 0) {
    throw Error("is_linearized_wrt: unknown node " + to_string(u));
  }
  const HeapDecomposition d = heap_decomposition(net);
  const std::size_t heap = d.assignment.at(u);
  NodeId head{};
  for (NodeId h : d.heads) {
    if (d.assignment.at(h) == heap) head = h;
  }
  for (const auto& [v, idx] : d.assignment) {
    if (idx != heap || v == head) continue;
    const NodeState& st = net.nodes.at(v);
    if (!st.pred || *st.pred <= v) return false;
    if (v >= u && net.nodes.at(*st.pred).succ != v) return false;
  }
  return true;
}

std::set<std::pair<NodeId, NodeId>> s_edges(const NetworkState& net) {
  std::set<std::pair<NodeId, NodeId>> edges;
  for (const auto& [id, st] : net.nodes) {
    for (NodeId y : st.scan_set) edges.emplace(id, y);
  }
  return edges;
}

std::uint64_t ord(const NetworkState& net, NodeId x) {
  auto it = net.nodes.find(x);
  if (it == net.nodes.end()) {
    throw Error("ord: unknown node " + to_string(x));
  }
  std::uint64_t rank = 0;
  for (auto rit = net.nodes.rbegin(); rit != net.nodes.rend(); ++rit) {
    if (rit->first == x) return rank;
    ++rank;
  }
  throw Error("ord: unknown node " + to_string(x));
}

std::uint64_t omega(const NetworkState& net, NodeId x, NodeId y) {
  return 2 * ord(net, x) + 2 * ord(net, y) + (x > y ? 1 : 0);
}

namespace {

template <typename Fn>
void for_each_known_id(const NodeState& st, Fn&& fn) {
  for (NodeId v : st.neighbors.items()) fn(v);
  for (NodeId v : st.downstream.items()) fn(v);
  for (NodeId v : st.scan_set) fn(v);
  if (st.pred) fn(*st.pred);
  if (st.succ) fn(*st.succ);
}

}  // namespace

bool heaps_connected(const NetworkState& net) {
  const HeapDecomposition d = heap_decomposition(net);
  Dsu dsu(d.heads.size());
  for (const auto& [id, st] : net.nodes) {
    const std::size_t a = d.assignment.at(id);
    for_each_known_id(st, [&](NodeId v) {
      if (auto it = d.assignment.find(v); it != d.assignment.end()) {
        dsu.unite(a, it->second);
      }
    });
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < d.heads.size(); ++i) {
    if (dsu.find(i) == i) ++components;
  }
  return components <= 1;
}

bool weakly_connected(const NetworkState& net) {
  std::map<NodeId, std::size_t> index;
  for (const auto& [id, st] : net.nodes) index.emplace(id, index.size());
  Dsu dsu(index.size());
  for (const auto& [id, st] : net.nodes) {
    const std::size_t a = index.at(id);
    for_each_known_id(st, [&](NodeId v) {
      if (auto it = index.find(v); it != index.end()) dsu.unite(a, it->second);
    });
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (dsu.find(i) == i) ++components;
  }
  return components <= 1;
}

}  // namespace cliquesim
