#include <string>
#include <vector>

#include "d2graph.h"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct GraphHandle {
  d2g_graph* g = nullptr;
  ~GraphHandle() { d2g_graph_free(g); }
};

struct AnalysisHandle {
  d2g_analysis* a = nullptr;
  ~AnalysisHandle() { d2g_analysis_free(a); }
};

struct CensusHandle {
  d2g_census* c = nullptr;
  ~CensusHandle() { d2g_census_free(c); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  d2g_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api builds and serializes graphs") {
  const int32_t endpoints[] = {0, 1, 1, 2, 2, 3};
  GraphHandle h;
  REQUIRE(d2g_graph_from_edges(4, endpoints, 3, &h.g) == D2G_OK);
  CHECK(d2g_graph_order(h.g) == 4);
  CHECK(d2g_graph_size(h.g) == 3);
  CHECK(d2g_graph_has_edge(h.g, 0, 1) == 1);
  CHECK(d2g_graph_has_edge(h.g, 0, 2) == 0);
  CHECK(d2g_graph_has_edge(h.g, 0, 9) == -1);
  CHECK(std::string(d2g_graph_label(h.g, 3)) == "3");
  CHECK(d2g_graph_label(h.g, 9) == nullptr);

  char* g6 = nullptr;
  REQUIRE(d2g_write_graph6(h.g, &g6) == D2G_OK);
  CHECK(take(g6) == "Ch");

  char* edges = nullptr;
  REQUIRE(d2g_write_edge_list(h.g, &edges) == D2G_OK);
  GraphHandle back;
  REQUIRE(d2g_parse_edge_list(take(edges).c_str(), &back.g) == D2G_OK);
  CHECK(d2g_graph_size(back.g) == 3);
}

TEST_CASE("c api error reporting") {
  d2g_graph* out = nullptr;
  CHECK(d2g_graph_from_edges(4, nullptr, 2, &out) ==
        D2G_ERR_INVALID_ARGUMENT);
  CHECK(d2g_parse_graph6("Ch", nullptr) == D2G_ERR_INVALID_ARGUMENT);

  const int32_t loop[] = {1, 1};
  CHECK(d2g_graph_from_edges(3, loop, 1, &out) == D2G_ERR_SELF_LOOP);
  CHECK(std::string(d2g_last_error()).find("loop") != std::string::npos);

  CHECK(d2g_parse_graph6("ChG", &out) == D2G_ERR_TRAILING_GARBAGE);
  CHECK(d2g_parse_edge_list("a b c", &out) == D2G_ERR_TOO_MANY_TOKENS);

  CHECK(std::string(d2g_status_name(D2G_ERR_SELF_LOOP)) == "self-loop");
  CHECK(std::string(d2g_status_name(D2G_OK)) == "ok");

  CHECK(d2g_graph_order(nullptr) == -1);
  CHECK(d2g_graph_size(nullptr) == -1);
  CHECK(d2g_analysis_d2_connected(nullptr) == -1);
  CHECK(d2g_census_failures(nullptr) == -1);
}

TEST_CASE("c api distance-2 transform") {
  GraphHandle c6;
  REQUIRE(d2g_parse_graph6("EhEG", &c6.g) == D2G_OK);
  GraphHandle d2;
  REQUIRE(d2g_distance2(c6.g, &d2.g) == D2G_OK);
  char* g6 = nullptr;
  REQUIRE(d2g_write_graph6(d2.g, &g6) == D2G_OK);
  CHECK(take(g6) == "EQhO");
}

TEST_CASE("c api fine contraction keeps class labels") {
  const char* text = "a b\na c\na d\nb c\nb d\nc d\nc x\nx y\ny d\nx d\nd u\nu v\n";
  GraphHandle g;
  REQUIRE(d2g_parse_edge_list(text, &g.g) == D2G_OK);

  GraphHandle q;
  REQUIRE(d2g_contract_fine(g.g, &q.g) == D2G_OK);
  CHECK(d2g_graph_order(q.g) == 4);
  CHECK(std::string(d2g_graph_label(q.g, 0)) == "{a,b,c,x,y}");
  CHECK(std::string(d2g_graph_label(q.g, 1)) == "{d}");
  char* g6 = nullptr;
  REQUIRE(d2g_write_graph6(q.g, &g6) == D2G_OK);
  CHECK(take(g6) == "Ch");

  char* pj = nullptr;
  REQUIRE(d2g_fine_partition_json(g.g, &pj) == D2G_OK);
  CHECK(json::parse(take(pj)) ==
        json::parse(R"([["a","b","c","x","y"],["d"],["u"],["v"]])"));

  GraphHandle c4;
  REQUIRE(d2g_parse_graph6("Cl", &c4.g) == D2G_OK);
  d2g_graph* nope = nullptr;
  CHECK(d2g_contract_fine(c4.g, &nope) == D2G_ERR_DIAMETER_TOO_SMALL);
  CHECK(std::string(d2g_last_error()).find("diameter") != std::string::npos);
}

TEST_CASE("c api dot rendering") {
  GraphHandle g;
  const char* text = "a b\na c\na d\nb c\nb d\nc d\nc x\nx y\ny d\nx d\nd u\nu v\n";
  REQUIRE(d2g_parse_edge_list(text, &g.g) == D2G_OK);

  char* flat = nullptr;
  REQUIRE(d2g_write_dot(g.g, 0, &flat) == D2G_OK);
  std::string flat_s = take(flat);
  CHECK(flat_s.find("graph G {") != std::string::npos);
  CHECK(flat_s.find("cluster") == std::string::npos);

  char* clustered = nullptr;
  REQUIRE(d2g_write_dot(g.g, 1, &clustered) == D2G_OK);
  std::string clustered_s = take(clustered);
  CHECK(clustered_s.find("subgraph cluster_0") != std::string::npos);
  CHECK(clustered_s.find("{a,b,c,x,y}") != std::string::npos);

  GraphHandle k3;
  REQUIRE(d2g_parse_graph6("Bw", &k3.g) == D2G_OK);
  char* out = nullptr;
  CHECK(d2g_write_dot(k3.g, 1, &out) == D2G_ERR_DIAMETER_TOO_SMALL);
}

TEST_CASE("c api analysis") {
  GraphHandle c6;
  REQUIRE(d2g_parse_graph6("EhEG", &c6.g) == D2G_OK);
  AnalysisHandle a;
  REQUIRE(d2g_analyze(c6.g, 1, &a.a) == D2G_OK);
  CHECK(d2g_analysis_d2_connected(a.a) == 0);
  CHECK(d2g_analysis_connected(a.a) == 1);
  CHECK(d2g_analysis_oracle_agreement(a.a) == 1);
  CHECK(std::string(d2g_analysis_branch(a.a)) == "diameter-3-plus");

  char* js = nullptr;
  REQUIRE(d2g_analysis_json(a.a, &js) == D2G_OK);
  json j = json::parse(take(js));
  CHECK(j["certificate"]["type"] == "lifted-coloring");
  CHECK(j["oracle_agreement"] == true);

  char* plain = nullptr;
  REQUIRE(d2g_analysis_text(a.a, 0, &plain) == D2G_OK);
  CHECK(take(plain).find("\x1b[") == std::string::npos);
  char* colored = nullptr;
  REQUIRE(d2g_analysis_text(a.a, 1, &colored) == D2G_OK);
  CHECK(take(colored).find("\x1b[") != std::string::npos);

  AnalysisHandle no_oracle;
  REQUIRE(d2g_analyze(c6.g, 0, &no_oracle.a) == D2G_OK);
  CHECK(d2g_analysis_oracle_agreement(no_oracle.a) == -1);
}

TEST_CASE("c api verification census") {
  CensusHandle c;
  REQUIRE(d2g_verify_range(1, 4, 2, &c.c) == D2G_OK);
  CHECK(d2g_census_failures(c.c) == 0);
  char* js = nullptr;
  REQUIRE(d2g_census_json(c.c, &js) == D2G_OK);
  json j = json::parse(take(js));
  CHECK(j["graphs_processed"] == 44);
  CHECK(j["d2_connected"] == 1);
  char* text = nullptr;
  REQUIRE(d2g_census_text(c.c, &text) == D2G_OK);
  CHECK(take(text).find("graphs processed: 44") != std::string::npos);

  CensusHandle stream;
  REQUIRE(d2g_verify_graph6_text("Dhc\n\nEhEG\nFhCKG\n", 1, &stream.c) ==
          D2G_OK);
  char* sjs = nullptr;
  REQUIRE(d2g_census_json(stream.c, &sjs) == D2G_OK);
  json sj = json::parse(take(sjs));
  CHECK(sj["graphs_processed"] == 3);
  CHECK(sj["branch_totals"]["diameter-2"] == 1);
  CHECK(sj["branch_totals"]["diameter-3-plus"] == 2);

  d2g_census* bad = nullptr;
  CHECK(d2g_verify_graph6_text("Dhc\nC!\n", 1, &bad) ==
        D2G_ERR_BYTE_OUT_OF_RANGE);
  CHECK(std::string(d2g_last_error()).find("line 2") != std::string::npos);

  CHECK(d2g_verify_range(1, 9, 1, &bad) == D2G_ERR_TOO_LARGE);
}
