#pragma once

#include <cstdint>
#include <string>

#include "cliquesim/network.hpp"

namespace cliquesim {

enum class TopologyKind {
  line,
  ring,
  star_in,
  star_out,
  random_tree,
  random_connected,
  heap_forest,
  clique_legal,
  adversarial,
};

enum class IdScheme { dense, sparse_random };

std::string to_string(TopologyKind k);
TopologyKind parse_topology_kind(const std::string& name);  // throws ConfigError
std::string to_string(IdScheme s);
IdScheme parse_id_scheme(const std::string& name);  // throws ConfigError

struct InitialStateSpec {
  TopologyKind kind = TopologyKind::line;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  IdScheme id_scheme = IdScheme::dense;
  std::size_t extra_edges = 0;  // random_connected
  std::size_t num_heaps = 1;    // heap_forest
};

// Deterministic in spec. Every output is weakly connected, stores no id
// outside the node set, and starts at round 0 with empty buffers.
// Throws ConfigError on invalid parameters.
NetworkState generate(const InitialStateSpec& spec);

}  // namespace cliquesim
