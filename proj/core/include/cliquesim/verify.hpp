#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cliquesim/network.hpp"

namespace cliquesim {

// p-links point up, s-links point down, and every successor claim is mutually
// consistent: y = s(x) implies p(y) = x.
bool is_valid(const NetworkState& net);

// Every node knows all others (N(v) = V - {v}) and the p/s links form the
// descending sorted list: for all v except the maximum, p(v) > v and
// s(p(v)) = v.
bool is_legal(const NetworkState& net);

struct HeapDecomposition {
  std::map<NodeId, std::size_t> assignment;  // node -> heap index
  std::set<NodeId> heads;
  std::map<std::size_t, std::size_t> sizes;  // heap index -> member count
};

// Partitions nodes by p-link reachability. A node is a head when p is absent
// or not larger than its own id (a pre-repair p is ignored). Heap indices are
// assigned in ascending order of head id. Throws Error when a p-link targets
// an unknown id.
HeapDecomposition heap_decomposition(const NetworkState& net);

std::size_t num_heaps(const NetworkState& net);

// True when, within u's heap, every non-head member v has p(v) > v and every
// member v >= u (other than the head) satisfies s(p(v)) = v.
bool is_linearized_wrt(const NetworkState& net, NodeId u);

// The literal edge set {(x, y) : y in S(x)}.
std::set<std::pair<NodeId, NodeId>> s_edges(const NetworkState& net);

// Descending-id rank: the largest id has ord 0.
std::uint64_t ord(const NetworkState& net, NodeId x);

// omega(x, y) = 2*ord(x) + 2*ord(y) + K where K = 1 iff x > y.
std::uint64_t omega(const NetworkState& net, NodeId x, NodeId y);

// Diagnostic (small n): true when contracting each heap to a vertex and
// adding every knowledge edge (N, L, S, p, s) between heaps yields a single
// connected component.
bool heaps_connected(const NetworkState& net);

// Knowledge-graph weak connectivity over edges {(u,v) : v in
// N(u) | L(u) | S(u) | {p(u)} | {s(u)}}.
bool weakly_connected(const NetworkState& net);

}  // namespace cliquesim
