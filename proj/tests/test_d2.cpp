#include <random>
#include <vector>

#include "d2graph/d2.hpp"
#include "d2graph/error.hpp"
#include "d2graph/io.hpp"
#include "d2graph/metrics.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using d2g::ErrorCode;
using d2g::Graph;
using fixtures::code_of;

TEST_CASE("distance-2 graph of known graphs") {
  // C6 splits into two triangles.
  CHECK(d2g::write_graph6(d2g::distance2_graph(fixtures::cycle_graph(6))) ==
        "EQhO");
  // P4: pairs at distance exactly two are {0,2} and {1,3}.
  Graph d2p4 = d2g::distance2_graph(fixtures::path_graph(4));
  CHECK(d2p4.size() == 2);
  CHECK(d2p4.has_edge(0, 2));
  CHECK(d2p4.has_edge(1, 3));
  // A complete graph has no pairs at distance two.
  CHECK(d2g::distance2_graph(fixtures::complete_graph(5)).size() == 0);
}

TEST_CASE("distance-2 edges are square edges minus direct edges") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 1 + static_cast<int>(rng() % 24);
    Graph g = fixtures::random_graph(rng, n, 0.2);
    Graph d2 = d2g::distance2_graph(g);
    Graph sq = d2g::square_graph(g);
    auto dist = fixtures::floyd_distances(g);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        CHECK(d2.has_edge(u, v) == (d == 2));
        CHECK(sq.has_edge(u, v) == (d == 1 || d == 2));
        CHECK(sq.has_edge(u, v) == (d2.has_edge(u, v) || g.has_edge(u, v)));
      }
    }
  }
}

TEST_CASE("distance-2 connectivity oracle") {
  d2g::D2Connectivity c4 = d2g::d2_connectivity_oracle(fixtures::cycle_graph(4));
  CHECK_FALSE(c4.connected);
  CHECK(c4.components.classes ==
        std::vector<std::vector<int>>{{0, 2}, {1, 3}});

  CHECK(d2g::d2_connectivity_oracle(fixtures::cycle_graph(5)).connected);
  CHECK(d2g::d2_connectivity_oracle(fixtures::petersen_graph()).connected);

  d2g::D2Connectivity k4 = d2g::d2_connectivity_oracle(fixtures::complete_graph(4));
  CHECK_FALSE(k4.connected);
  CHECK(k4.components.class_count() == 4);

  // Star: the leaves pairwise sit at distance two, the center is isolated.
  d2g::D2Connectivity star = d2g::d2_connectivity_oracle(fixtures::star_graph(5));
  CHECK_FALSE(star.connected);
  CHECK(star.components.classes ==
        std::vector<std::vector<int>>{{0}, {1, 2, 3, 4, 5}});

  CHECK(code_of([] {
          d2g::d2_connectivity_oracle(Graph::from_edges(0, {}));
        }) == ErrorCode::empty_graph);
}
