#include <random>
#include <string>
#include <variant>
#include <vector>

#include "d2graph/d2.hpp"
#include "d2graph/error.hpp"
#include "d2graph/io.hpp"
#include "d2graph/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using d2g::ErrorCode;
using d2g::Graph;
using d2g::Partition;
using d2g::VertexSet;
using fixtures::code_of;

TEST_CASE("graph_from_mask matches the graph6 pair order") {
  std::mt19937 rng(41);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      int bits = n * (n - 1) / 2;
      std::uint64_t mask = rng() & ((std::uint64_t{1} << bits) - 1);
      Graph g = d2g::graph_from_mask(n, mask);
      CHECK(g.size() == __builtin_popcountll(mask));
      CHECK(d2g::parse_graph6(d2g::write_graph6(g)) == g);
    }
  }
  // Pair order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3): the path 0-1-2-3 uses
  // bits 0, 2, and 5.
  CHECK(d2g::graph_from_mask(4, 0b100101) == fixtures::path_graph(4));
}

TEST_CASE("enumeration counts connected labeled graphs") {
  const std::int64_t expected[] = {1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    std::int64_t count = 0;
    d2g::enumerate_connected_graphs(n, [&](const Graph&) { ++count; });
    CHECK(count == expected[n - 1]);
  }
  CHECK(code_of([] { d2g::enumerate_connected_graphs(0, [](const Graph&) {}); }) ==
        ErrorCode::index_out_of_range);
  CHECK(code_of([] { d2g::enumerate_connected_graphs(8, [](const Graph&) {}); }) ==
        ErrorCode::too_large);
}

TEST_CASE("component split validator") {
  std::string why;
  Graph star = fixtures::star_graph(5);
  d2g::ComponentSplit good{d2g::d2_connectivity_oracle(star).components};
  CHECK(d2g::validate_component_split(star, good, &why));

  d2g::ComponentSplit one_class{Partition{{{0, 1, 2, 3, 4, 5}}}};
  CHECK_FALSE(d2g::validate_component_split(star, one_class, &why));
  CHECK(why == "component split needs at least two classes");

  d2g::ComponentSplit crossing{Partition{{{0, 1}, {2, 3, 4, 5}}}};
  CHECK_FALSE(d2g::validate_component_split(star, crossing, &why));
  CHECK(why == "a distance-2 pair crosses between classes");

  d2g::ComponentSplit not_covering{Partition{{{0}, {1, 2}}}};
  CHECK_FALSE(d2g::validate_component_split(star, not_covering, &why));
  CHECK(why == "classes do not partition the vertex set");
}

TEST_CASE("spanning bipartite validator") {
  std::string why;
  Graph c4 = fixtures::cycle_graph(4);
  d2g::SpanningBipartite good{VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})};
  CHECK(d2g::validate_spanning_bipartite(c4, good, &why));

  d2g::SpanningBipartite overlap{VertexSet::of(4, {0, 2}),
                                 VertexSet::of(4, {0, 1, 3})};
  CHECK_FALSE(d2g::validate_spanning_bipartite(c4, overlap, &why));
  CHECK(why == "witness sides overlap");

  d2g::SpanningBipartite empty_side{VertexSet(4), VertexSet::full(4)};
  CHECK_FALSE(d2g::validate_spanning_bipartite(c4, empty_side, &why));
  CHECK(why == "witness sides must be nonempty");

  d2g::SpanningBipartite gap{VertexSet::of(4, {0}), VertexSet::of(4, {1, 3})};
  CHECK_FALSE(d2g::validate_spanning_bipartite(c4, gap, &why));
  CHECK(why == "witness sides do not cover the vertex set");

  // P4 has the right shape but 0-3 is not an edge.
  Graph p4 = fixtures::path_graph(4);
  CHECK_FALSE(d2g::validate_spanning_bipartite(p4, good, &why));
  CHECK(why == "a cross pair is missing its edge");
}

TEST_CASE("lifted coloring validator") {
  std::string why;
  Graph g = fixtures::trap8_fixture();
  d2g::LiftedColoring good{VertexSet::of(8, {0, 1, 2, 4, 5, 6}),
                           VertexSet::of(8, {3, 7})};
  CHECK(d2g::validate_lifted_coloring(g, good, &why));

  // Vertex 6 sits at distance 2 from the big class; moving it across leaks a
  // distance-2 pair.
  d2g::LiftedColoring moved{VertexSet::of(8, {0, 1, 2, 4, 5}),
                            VertexSet::of(8, {3, 6, 7})};
  CHECK_FALSE(d2g::validate_lifted_coloring(g, moved, &why));
  CHECK(why == "a distance-2 pair crosses between color classes");

  d2g::LiftedColoring lopsided{VertexSet::full(8), VertexSet(8)};
  CHECK_FALSE(d2g::validate_lifted_coloring(g, lopsided, &why));
  CHECK(why == "both color classes must be nonempty");
}

TEST_CASE("odd walk validator") {
  std::string why;
  Graph c7 = fixtures::cycle_graph(7);
  auto outcome = d2g::decide_d2_connectivity(c7);
  REQUIRE(outcome.quotient.has_value());
  const auto& walk = std::get<d2g::OddWalkInQuotient>(outcome.certificate);
  CHECK(d2g::validate_odd_walk_in_quotient(c7, *outcome.quotient, walk, &why));

  d2g::OddWalkInQuotient open_walk{{0, 1, 2, 3}};
  CHECK_FALSE(d2g::validate_odd_walk_in_quotient(c7, *outcome.quotient,
                                                 open_walk, &why));
  CHECK(why == "walk is not closed");

  d2g::OddWalkInQuotient even_walk{{0, 1, 2, 3, 0}};
  CHECK_FALSE(d2g::validate_odd_walk_in_quotient(c7, *outcome.quotient,
                                                 even_walk, &why));
  CHECK(why == "walk does not have odd length");

  d2g::OddWalkInQuotient jump{{0, 3, 6, 0}};
  CHECK_FALSE(
      d2g::validate_odd_walk_in_quotient(c7, *outcome.quotient, jump, &why));
  CHECK(why == "walk steps off the quotient edges");

  // A quotient built from a non-fine partition is rejected.
  Partition merged;
  merged.classes = {{0, 1}, {2}, {3}, {4}, {5}, {6}};
  d2g::QuotientGraph fake = d2g::contract(c7, merged);
  d2g::OddWalkInQuotient small_walk{{0, 1, 2, 0}};
  CHECK_FALSE(
      d2g::validate_odd_walk_in_quotient(c7, fake, small_walk, &why));
  CHECK(why == "a quotient class is not a fine set");
}

TEST_CASE("whole-certificate validation") {
  std::string why;
  for (const Graph& g :
       {fixtures::complete_graph(1), fixtures::complete_graph(5),
        Graph::from_edges(5, {{0, 1}, {2, 3}}), fixtures::cycle_graph(4),
        fixtures::cycle_graph(5), fixtures::cycle_graph(6),
        fixtures::cycle_graph(7), fixtures::trap8_fixture(),
        fixtures::petersen_graph()}) {
    auto outcome = d2g::decide_d2_connectivity(g);
    CAPTURE(d2g::write_graph6(g));
    why.clear();
    CHECK(d2g::validate_certificate(g, outcome, &why));
    CHECK(why.empty());
  }

  // Branch must match the graph, not just hold internally.
  auto c5_outcome = d2g::decide_d2_connectivity(fixtures::cycle_graph(5));
  CHECK_FALSE(
      d2g::validate_certificate(fixtures::cycle_graph(6), c5_outcome, &why));
  CHECK(why == "branch should be diameter-3-plus");

  // Flipping the verdict invalidates the outcome.
  auto c6_outcome = d2g::decide_d2_connectivity(fixtures::cycle_graph(6));
  c6_outcome.d2_connected = true;
  CHECK_FALSE(
      d2g::validate_certificate(fixtures::cycle_graph(6), c6_outcome, &why));
}

TEST_CASE("theorem suite passes on fixtures and lists the right checks") {
  auto ids = [](const d2g::TheoremReport& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks) out.emplace_back(c.id);
    return out;
  };

  d2g::TheoremReport trap = d2g::check_theorems(fixtures::trap8_fixture());
  CHECK(trap.all_pass());
  CHECK(trap.graph6 == d2g::write_graph6(fixtures::trap8_fixture()));
  CHECK(ids(trap) ==
        std::vector<std::string>{
            "oracle-equivalence", "d2-edge-identity",
            "complement-components-agreement", "certificate-soundness",
            "bipartite-implies-disconnected", "small-order-rules",
            "fine-partition-validity", "distance-preservation",
            "quotient-diameter-equality", "quotient-idempotence",
            "quotient-d2-equivalence", "bipartite-quotient-criterion"});

  d2g::TheoremReport c4 = d2g::check_theorems(fixtures::cycle_graph(4));
  CHECK(c4.all_pass());
  CHECK(ids(c4) ==
        std::vector<std::string>{
            "oracle-equivalence", "d2-edge-identity",
            "complement-components-agreement", "certificate-soundness",
            "bipartite-implies-disconnected", "small-order-rules",
            "diameter-2-complement-criterion"});

  d2g::TheoremReport split =
      d2g::check_theorems(Graph::from_edges(5, {{0, 1}, {2, 3}}));
  CHECK(split.all_pass());
  CHECK(ids(split).size() == 4);

  CHECK(split.failed_ids().empty());
  CHECK(code_of([] { d2g::check_theorems(Graph::from_edges(0, {})); }) ==
        ErrorCode::empty_graph);
}

TEST_CASE("theorem suite flags a broken outcome") {
  Graph g = fixtures::cycle_graph(6);
  auto outcome = d2g::decide_d2_connectivity(g);
  outcome.d2_connected = true;  // wrong on purpose
  d2g::TheoremReport report = d2g::check_theorems(g, outcome);
  CHECK_FALSE(report.all_pass());
  auto failed = report.failed_ids();
  CHECK(std::find(failed.begin(), failed.end(), "oracle-equivalence") !=
        failed.end());
  CHECK(std::find(failed.begin(), failed.end(), "certificate-soundness") !=
        failed.end());
}

TEST_CASE("family search certifies distance-2 connectivity") {
  CHECK(d2g::induced_family_sufficiency(fixtures::cycle_graph(5)));
  CHECK(d2g::induced_family_sufficiency(fixtures::petersen_graph()));
  CHECK(d2g::induced_family_sufficiency(d2g::bull_graph()));
  CHECK(d2g::induced_family_sufficiency(d2g::apex_graph()));
  CHECK_FALSE(d2g::induced_family_sufficiency(fixtures::cycle_graph(6)));
  CHECK_FALSE(d2g::induced_family_sufficiency(fixtures::path_graph(5)));
  CHECK_FALSE(d2g::induced_family_sufficiency(fixtures::complete_graph(6)));

  CHECK(code_of([] {
          d2g::induced_family_sufficiency(fixtures::cycle_graph(11));
        }) == ErrorCode::too_large);
  CHECK(code_of([] {
          d2g::induced_family_sufficiency(Graph::from_edges(2, {}));
        }) == ErrorCode::disconnected);

  // Soundness: a hit always means the distance-2 graph is connected.
  for (int n = 5; n <= 6; ++n) {
    d2g::enumerate_connected_graphs(n, [&](const Graph& g) {
      if (d2g::induced_family_sufficiency(g)) {
        CAPTURE(d2g::write_graph6(g));
        CHECK(d2g::d2_connectivity_oracle(g).connected);
      }
    });
  }
}

TEST_CASE("census over a small range") {
  d2g::CensusReport r = d2g::run_census_range(1, 5);
  CHECK(r.graphs_processed == 772);
  CHECK(r.connected_inputs == 772);
  CHECK(r.disconnected_inputs == 0);
  CHECK(r.failures.empty());
  // K1 plus the 132 family members on five vertices.
  CHECK(r.d2_connected == 133);
  CHECK(r.d2_disconnected == 639);
  CHECK(r.branch_totals.at("trivial-K1") == 1);
  CHECK(r.branch_totals.at("complete-graph") == 4);
  CHECK(r.wall_seconds > 0);

  std::int64_t total = 0;
  for (const auto& [name, count] : r.branch_totals) total += count;
  CHECK(total == r.graphs_processed);

  CHECK(code_of([] { d2g::run_census_range(0, 3); }) ==
        ErrorCode::index_out_of_range);
  CHECK(code_of([] { d2g::run_census_range(3, 2); }) ==
        ErrorCode::index_out_of_range);
  CHECK(code_of([] { d2g::run_census_range(1, 8); }) == ErrorCode::too_large);
}

TEST_CASE("census aggregation is deterministic across job counts") {
  d2g::CensusReport serial = d2g::run_census_range(1, 5, {.jobs = 1});
  d2g::CensusReport parallel = d2g::run_census_range(1, 5, {.jobs = 4});
  CHECK(serial.branch_totals == parallel.branch_totals);
  CHECK(serial.graphs_processed == parallel.graphs_processed);
  CHECK(serial.connected_inputs == parallel.connected_inputs);
  CHECK(serial.d2_connected == parallel.d2_connected);
  CHECK(serial.d2_disconnected == parallel.d2_disconnected);
  CHECK(serial.failures == parallel.failures);
}

TEST_CASE("census over caller-supplied graphs") {
  std::vector<Graph> graphs{fixtures::cycle_graph(5), fixtures::cycle_graph(6),
                            fixtures::cycle_graph(7),
                            Graph::from_edges(3, {{0, 1}})};
  d2g::CensusReport r = d2g::run_census(graphs, {.jobs = 2});
  CHECK(r.graphs_processed == 4);
  CHECK(r.connected_inputs == 3);
  CHECK(r.disconnected_inputs == 1);
  CHECK(r.branch_totals.at("diameter-2") == 1);
  CHECK(r.branch_totals.at("diameter-3-plus") == 2);
  CHECK(r.branch_totals.at("disconnected-input") == 1);
  CHECK(r.failures.empty());
}
