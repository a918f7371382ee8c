#include "cliquesim/topology.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "cliquesim/engine.hpp"
#include "cliquesim/errors.hpp"
#include "cliquesim/verify.hpp"
#include "support/helpers.hpp"

using namespace cliquesim;
using namespace cliquesim::test;

namespace {

const std::vector<TopologyKind> kAllKinds = {
    TopologyKind::line,         TopologyKind::ring,
    TopologyKind::star_in,      TopologyKind::star_out,
    TopologyKind::random_tree,  TopologyKind::random_connected,
    TopologyKind::heap_forest,  TopologyKind::clique_legal,
    TopologyKind::adversarial,
};

InitialStateSpec spec_for(TopologyKind kind, std::size_t n,
                          std::uint64_t seed) {
  InitialStateSpec spec{.kind = kind, .n = n, .seed = seed};
  if (kind == TopologyKind::heap_forest) spec.num_heaps = (n + 1) / 2;
  return spec;
}

// Every id a node stores, across all of its fields.
std::vector<NodeId> stored_ids(const NodeState& st) {
  std::vector<NodeId> out = st.neighbors.items();
  for (NodeId v : st.downstream.items()) out.push_back(v);
  for (NodeId v : st.scan_set) out.push_back(v);
  if (st.pred) out.push_back(*st.pred);
  if (st.succ) out.push_back(*st.succ);
  return out;
}

}  // namespace

TEST_SUITE("generate: shapes") {
  TEST_CASE("line knows its sorted neighbors on both sides") {
    NetworkState net = generate({.kind = TopologyKind::line, .n = 3});
    CHECK(net.nodes.at(nid(1)).neighbors.items() == ids({2}));
    CHECK(net.nodes.at(nid(2)).neighbors.items() == ids({1, 3}));
    CHECK(net.nodes.at(nid(3)).neighbors.items() == ids({2}));
    for (const auto& [id, st] : net.nodes) {
      CHECK(!st.pred);
      CHECK(!st.succ);
      CHECK(st.status == Status::inactive);
    }
  }

  TEST_CASE("ring additionally closes the two ends") {
    NetworkState net = generate({.kind = TopologyKind::ring, .n = 4});
    CHECK(net.nodes.at(nid(1)).neighbors.items() == ids({2, 4}));
    CHECK(net.nodes.at(nid(2)).neighbors.items() == ids({1, 3}));
    CHECK(net.nodes.at(nid(3)).neighbors.items() == ids({2, 4}));
    CHECK(net.nodes.at(nid(4)).neighbors.items() == ids({1, 3}));
  }

  TEST_CASE("star-in: every leaf knows the center, which knows nothing") {
    NetworkState net = generate({.kind = TopologyKind::star_in, .n = 6});
    std::vector<NodeId> centers;
    for (const auto& [id, st] : net.nodes) {
      if (st.neighbors.empty()) centers.push_back(id);
    }
    REQUIRE(centers.size() == 1);
    for (const auto& [id, st] : net.nodes) {
      if (id == centers[0]) continue;
      CHECK(st.neighbors.items() == std::vector<NodeId>{centers[0]});
    }
  }

  TEST_CASE("star-out: the center knows every leaf, which know nothing") {
    NetworkState net = generate({.kind = TopologyKind::star_out, .n = 6});
    std::vector<NodeId> centers;
    for (const auto& [id, st] : net.nodes) {
      if (st.neighbors.size() == net.nodes.size() - 1) centers.push_back(id);
    }
    REQUIRE(centers.size() == 1);
    for (const auto& [id, st] : net.nodes) {
      if (id != centers[0]) CHECK(st.neighbors.empty());
    }
  }

  TEST_CASE("random-tree spreads exactly n-1 directed edges") {
    NetworkState net = generate(
        {.kind = TopologyKind::random_tree, .n = 12, .seed = 4});
    std::size_t edges = 0;
    for (const auto& [id, st] : net.nodes) edges += st.neighbors.size();
    CHECK(edges == 11);
  }

  TEST_CASE("random-connected adds the requested number of extra edges") {
    NetworkState net = generate({.kind = TopologyKind::random_connected,
                                 .n = 12,
                                 .seed = 4,
                                 .extra_edges = 7});
    std::size_t edges = 0;
    for (const auto& [id, st] : net.nodes) edges += st.neighbors.size();
    CHECK(edges == 11 + 7);
  }

  TEST_CASE("random-connected saturates into the full directed clique") {
    // n=3 has 6 ordered pairs and the tree already uses 2 of them.
    NetworkState net = generate({.kind = TopologyKind::random_connected,
                                 .n = 3,
                                 .seed = 9,
                                 .extra_edges = 4});
    for (const auto& [id, st] : net.nodes) CHECK(st.neighbors.size() == 2);
  }

  TEST_CASE("heap-forest builds the requested number of upward trees") {
    NetworkState net = generate({.kind = TopologyKind::heap_forest,
                                 .n = 9,
                                 .seed = 2,
                                 .num_heaps = 3});
    CHECK(is_valid(net));
    CHECK(num_heaps(net) == 3);
    for (const auto& [id, st] : net.nodes) {
      CHECK(!st.succ);
      if (st.pred) CHECK(*st.pred > id);
    }
  }

  TEST_CASE("clique-legal starts settled") {
    NetworkState net = generate({.kind = TopologyKind::clique_legal, .n = 3});
    CHECK(is_legal(net));
    CHECK(is_valid(net));
    CHECK(net.nodes.at(nid(1)).neighbors.items() == ids({2, 3}));
    CHECK(net.nodes.at(nid(2)).neighbors.items() == ids({1, 3}));
    CHECK(net.nodes.at(nid(3)).neighbors.items() == ids({1, 2}));
    CHECK(net.nodes.at(nid(1)).pred == nid(2));
    CHECK(net.nodes.at(nid(2)).pred == nid(3));
    CHECK(!net.nodes.at(nid(3)).pred);
    CHECK(!net.nodes.at(nid(1)).succ);
    CHECK(net.nodes.at(nid(2)).succ == nid(1));
    CHECK(net.nodes.at(nid(3)).succ == nid(2));
    for (const auto& [id, st] : net.nodes) {
      CHECK(st.status == Status::active);
    }
  }
}

TEST_SUITE("generate: common guarantees") {
  TEST_CASE("all kinds: fresh round, no buffers, no foreign or self ids") {
    for (TopologyKind kind : kAllKinds) {
      for (std::size_t n : {1, 2, 5, 17}) {
        for (std::uint64_t seed : {0ULL, 7ULL}) {
          CAPTURE(to_string(kind));
          CAPTURE(n);
          CAPTURE(seed);
          NetworkState net = generate(spec_for(kind, n, seed));
          CHECK(net.round == 0);
          CHECK(net.buffers.empty());
          REQUIRE(net.nodes.size() == n);
          for (const auto& [id, st] : net.nodes) {
            CHECK(st.id == id);
            for (NodeId v : stored_ids(st)) {
              CHECK(v != id);
              CHECK(net.nodes.count(v) == 1);
            }
          }
        }
      }
    }
  }

  TEST_CASE("all kinds produce weakly connected knowledge graphs") {
    for (TopologyKind kind : kAllKinds) {
      for (std::size_t n : {2, 3, 9, 24}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          CAPTURE(to_string(kind));
          CAPTURE(n);
          CAPTURE(seed);
          NetworkState net = generate(spec_for(kind, n, seed));
          CHECK(weakly_connected(net));
        }
      }
    }
  }

  TEST_CASE("identical specs give identical networks") {
    for (TopologyKind kind : kAllKinds) {
      InitialStateSpec spec = spec_for(kind, 13, 42);
      CHECK(generate(spec) == generate(spec));
      spec.id_scheme = IdScheme::sparse_random;
      CHECK(generate(spec) == generate(spec));
    }
  }

  TEST_CASE("the seed actually steers the randomized kinds") {
    for (TopologyKind kind :
         {TopologyKind::random_tree, TopologyKind::random_connected,
          TopologyKind::heap_forest, TopologyKind::adversarial}) {
      CAPTURE(to_string(kind));
      CHECK(generate(spec_for(kind, 13, 1)) != generate(spec_for(kind, 13, 2)));
    }
  }

  TEST_CASE("dense ids are 1..n, sparse ids are distinct within bounds") {
    NetworkState dense = generate({.kind = TopologyKind::line, .n = 5});
    std::vector<NodeId> got;
    for (const auto& [id, st] : dense.nodes) got.push_back(id);
    CHECK(got == ids({1, 2, 3, 4, 5}));

    NetworkState sparse = generate({.kind = TopologyKind::line,
                                    .n = 40,
                                    .seed = 3,
                                    .id_scheme = IdScheme::sparse_random});
    REQUIRE(sparse.nodes.size() == 40);
    for (const auto& [id, st] : sparse.nodes) {
      CHECK(id.value >= 1);
      CHECK(id.value <= 1'000'000'000);
    }
  }
}

TEST_SUITE("generate: reachability under the protocol") {
  // Initial knowledge that only exists as a downward p link, an
  // unreciprocated s link, or a head's relay entry is torn down before any
  // durable record of it is made, so the generators must never rely on such
  // links for connectivity. Small adversarial instances are the regression
  // surface: with n=2 a single fragile link is the whole graph.
  TEST_CASE("tiny adversarial instances always reach the sorted clique") {
    for (std::size_t n : {2, 3, 4}) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CAPTURE(n);
        CAPTURE(seed);
        NetworkState net = generate(
            {.kind = TopologyKind::adversarial, .n = n, .seed = seed});
        RunResult res = run(net, {.max_rounds = 120});
        REQUIRE(res.stopped_at.has_value());
        CHECK(is_legal(net));
      }
    }
  }
}

TEST_SUITE("generate: parameter validation") {
  TEST_CASE("rejects bad sizes and kind-specific parameters") {
    CHECK_THROWS_AS(generate({.kind = TopologyKind::line, .n = 0}),
                    ConfigError);
    CHECK_THROWS_AS(generate({.kind = TopologyKind::heap_forest,
                              .n = 4,
                              .num_heaps = 0}),
                    ConfigError);
    CHECK_THROWS_AS(generate({.kind = TopologyKind::heap_forest,
                              .n = 4,
                              .num_heaps = 5}),
                    ConfigError);
    CHECK_THROWS_AS(generate({.kind = TopologyKind::line,
                              .n = 4,
                              .extra_edges = 1}),
                    ConfigError);
    CHECK_THROWS_AS(generate({.kind = TopologyKind::random_connected,
                              .n = 3,
                              .extra_edges = 5}),
                    ConfigError);
  }

  TEST_CASE("kind and id-scheme names round-trip; unknown names throw") {
    for (TopologyKind kind : kAllKinds) {
      CHECK(parse_topology_kind(to_string(kind)) == kind);
    }
    for (IdScheme s : {IdScheme::dense, IdScheme::sparse_random}) {
      CHECK(parse_id_scheme(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_topology_kind("blob"), ConfigError);
    CHECK_THROWS_AS(parse_id_scheme("blob"), ConfigError);
  }
}
