#include "d2graph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "d2graph/report.hpp"

struct d2g_graph {
  d2g::LabeledGraph lg;
};

struct d2g_analysis {
  d2g::AnalysisReport report;
};

struct d2g_census {
  d2g::CensusReport report;
};

namespace {

thread_local std::string t_last_error;

d2g_status map_code(d2g::ErrorCode code) {
  using d2g::ErrorCode;
  switch (code) {
    case ErrorCode::index_out_of_range: return D2G_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::self_loop: return D2G_ERR_SELF_LOOP;
    case ErrorCode::empty_set: return D2G_ERR_EMPTY_SET;
    case ErrorCode::empty_graph: return D2G_ERR_EMPTY_GRAPH;
    case ErrorCode::disconnected: return D2G_ERR_DISCONNECTED;
    case ErrorCode::diameter_too_small: return D2G_ERR_DIAMETER_TOO_SMALL;
    case ErrorCode::too_large: return D2G_ERR_TOO_LARGE;
    case ErrorCode::bad_header: return D2G_ERR_BAD_HEADER;
    case ErrorCode::byte_out_of_range: return D2G_ERR_BYTE_OUT_OF_RANGE;
    case ErrorCode::truncated_bitstream: return D2G_ERR_TRUNCATED_BITSTREAM;
    case ErrorCode::trailing_garbage: return D2G_ERR_TRAILING_GARBAGE;
    case ErrorCode::too_many_tokens: return D2G_ERR_TOO_MANY_TOKENS;
    case ErrorCode::partition_mismatch: return D2G_ERR_PARTITION_MISMATCH;
    case ErrorCode::improper_coloring: return D2G_ERR_IMPROPER_COLORING;
    case ErrorCode::wrong_diameter: return D2G_ERR_WRONG_DIAMETER;
    case ErrorCode::internal_consistency: return D2G_ERR_INTERNAL_CONSISTENCY;
    case ErrorCode::parse_error: return D2G_ERR_PARSE;
  }
  return D2G_ERR_INTERNAL;
}

template <typename F>
d2g_status guarded(F&& body) {
  try {
    body();
    t_last_error.clear();
    return D2G_OK;
  } catch (const d2g::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return D2G_ERR_NOMEM;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return D2G_ERR_INTERNAL;
  }
}

d2g_status invalid(const char* message) {
  t_last_error = message;
  return D2G_ERR_INVALID_ARGUMENT;
}

d2g_status copy_out(const std::string& text, char** out) {
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (buffer == nullptr) {
    t_last_error = "out of memory";
    return D2G_ERR_NOMEM;
  }
  std::memcpy(buffer, text.data(), text.size() + 1);
  *out = buffer;
  t_last_error.clear();
  return D2G_OK;
}

std::vector<d2g::Graph> parse_graph6_lines(const std::string& text) {
  std::vector<d2g::Graph> graphs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    bool last = end == std::string::npos;
    if (last) end = text.size();
    std::string_view line(text.data() + start, end - start);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (!line.empty()) {
      try {
        d2g::Graph g = d2g::parse_graph6(line);
        if (g.order() == 0) {
          throw d2g::Error(d2g::ErrorCode::empty_graph,
                           "graph with no vertices");
        }
        graphs.push_back(std::move(g));
      } catch (const d2g::Error& e) {
        throw d2g::Error(e.code(), "line " + std::to_string(line_no) + ": " +
                                       e.what());
      }
    }
    if (last) break;
    start = end + 1;
  }
  return graphs;
}

}  // namespace

extern "C" {

const char* d2g_status_name(d2g_status status) {
  switch (status) {
    case D2G_OK: return "ok";
    case D2G_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case D2G_ERR_NOMEM: return "out-of-memory";
    case D2G_ERR_INTERNAL: return "internal";
    default: break;
  }
  switch (status) {
    case D2G_ERR_INDEX_OUT_OF_RANGE:
      return d2g::error_code_name(d2g::ErrorCode::index_out_of_range);
    case D2G_ERR_SELF_LOOP:
      return d2g::error_code_name(d2g::ErrorCode::self_loop);
    case D2G_ERR_EMPTY_SET:
      return d2g::error_code_name(d2g::ErrorCode::empty_set);
    case D2G_ERR_EMPTY_GRAPH:
      return d2g::error_code_name(d2g::ErrorCode::empty_graph);
    case D2G_ERR_DISCONNECTED:
      return d2g::error_code_name(d2g::ErrorCode::disconnected);
    case D2G_ERR_DIAMETER_TOO_SMALL:
      return d2g::error_code_name(d2g::ErrorCode::diameter_too_small);
    case D2G_ERR_TOO_LARGE:
      return d2g::error_code_name(d2g::ErrorCode::too_large);
    case D2G_ERR_BAD_HEADER:
      return d2g::error_code_name(d2g::ErrorCode::bad_header);
    case D2G_ERR_BYTE_OUT_OF_RANGE:
      return d2g::error_code_name(d2g::ErrorCode::byte_out_of_range);
    case D2G_ERR_TRUNCATED_BITSTREAM:
      return d2g::error_code_name(d2g::ErrorCode::truncated_bitstream);
    case D2G_ERR_TRAILING_GARBAGE:
      return d2g::error_code_name(d2g::ErrorCode::trailing_garbage);
    case D2G_ERR_TOO_MANY_TOKENS:
      return d2g::error_code_name(d2g::ErrorCode::too_many_tokens);
    case D2G_ERR_PARTITION_MISMATCH:
      return d2g::error_code_name(d2g::ErrorCode::partition_mismatch);
    case D2G_ERR_IMPROPER_COLORING:
      return d2g::error_code_name(d2g::ErrorCode::improper_coloring);
    case D2G_ERR_WRONG_DIAMETER:
      return d2g::error_code_name(d2g::ErrorCode::wrong_diameter);
    case D2G_ERR_INTERNAL_CONSISTENCY:
      return d2g::error_code_name(d2g::ErrorCode::internal_consistency);
    case D2G_ERR_PARSE:
      return d2g::error_code_name(d2g::ErrorCode::parse_error);
    default: return "unknown";
  }
}

const char* d2g_last_error(void) { return t_last_error.c_str(); }

void d2g_string_free(char* s) { std::free(s); }
void d2g_graph_free(d2g_graph* g) { delete g; }
void d2g_analysis_free(d2g_analysis* a) { delete a; }
void d2g_census_free(d2g_census* c) { delete c; }

d2g_status d2g_graph_from_edges(int32_t n, const int32_t* endpoints,
                                size_t edge_count, d2g_graph** out) {
  if (out == nullptr || (endpoints == nullptr && edge_count > 0)) {
    return invalid("null argument");
  }
  return guarded([&] {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count);
    for (size_t e = 0; e < edge_count; ++e) {
      edges.emplace_back(endpoints[2 * e], endpoints[2 * e + 1]);
    }
    *out = new d2g_graph{d2g::make_labeled(d2g::Graph::from_edges(n, edges))};
  });
}

d2g_status d2g_parse_graph6(const char* line, d2g_graph** out) {
  if (line == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new d2g_graph{d2g::make_labeled(d2g::parse_graph6(line))};
  });
}

d2g_status d2g_parse_edge_list(const char* text, d2g_graph** out) {
  if (text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = new d2g_graph{d2g::parse_edge_list(text)}; });
}

d2g_status d2g_write_graph6(const d2g_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st = guarded([&] { text = d2g::write_graph6(g->lg.graph); });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

d2g_status d2g_write_edge_list(const d2g_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st = guarded([&] { text = d2g::write_edge_list(g->lg); });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

d2g_status d2g_write_dot(const d2g_graph* g, int cluster_by_fine_partition,
                         char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st = guarded([&] {
    if (cluster_by_fine_partition != 0) {
      d2g::Partition p = d2g::maximal_fine_partition(g->lg.graph);
      text = d2g::write_dot(g->lg, &p);
    } else {
      text = d2g::write_dot(g->lg);
    }
  });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

int32_t d2g_graph_order(const d2g_graph* g) {
  return g == nullptr ? -1 : g->lg.graph.order();
}

int64_t d2g_graph_size(const d2g_graph* g) {
  return g == nullptr ? -1 : g->lg.graph.size();
}

int d2g_graph_has_edge(const d2g_graph* g, int32_t u, int32_t v) {
  if (g == nullptr) return -1;
  int result = -1;
  d2g_status st =
      guarded([&] { result = g->lg.graph.has_edge(u, v) ? 1 : 0; });
  return st == D2G_OK ? result : -1;
}

const char* d2g_graph_label(const d2g_graph* g, int32_t v) {
  if (g == nullptr || v < 0 || v >= g->lg.graph.order()) return nullptr;
  return g->lg.labels[static_cast<std::size_t>(v)].c_str();
}

d2g_status d2g_distance2(const d2g_graph* g, d2g_graph** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new d2g_graph{d2g::make_labeled(d2g::distance2_graph(g->lg.graph),
                                           g->lg.labels)};
  });
}

d2g_status d2g_contract_fine(const d2g_graph* g, d2g_graph** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    d2g::QuotientGraph q = d2g::hat_graph(g->lg.graph);
    std::vector<std::string> labels;
    labels.reserve(q.partition.classes.size());
    for (const auto& cls : q.partition.classes) {
      labels.push_back(d2g::class_label(cls, g->lg.labels));
    }
    *out = new d2g_graph{
        d2g::make_labeled(std::move(q.quotient), std::move(labels))};
  });
}

d2g_status d2g_fine_partition_json(const d2g_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st = guarded([&] {
    d2g::Partition p = d2g::maximal_fine_partition(g->lg.graph);
    text = d2g::partition_json(p, g->lg.labels);
  });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

d2g_status d2g_analyze(const d2g_graph* g, int with_oracle,
                       d2g_analysis** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    d2g::AnalyzeOptions options;
    options.with_oracle = with_oracle != 0;
    *out = new d2g_analysis{d2g::analyze_graph(g->lg, options)};
  });
}

int d2g_analysis_d2_connected(const d2g_analysis* a) {
  return a == nullptr ? -1 : (a->report.outcome.d2_connected ? 1 : 0);
}

int d2g_analysis_connected(const d2g_analysis* a) {
  return a == nullptr ? -1 : (a->report.connected ? 1 : 0);
}

int d2g_analysis_oracle_agreement(const d2g_analysis* a) {
  if (a == nullptr || !a->report.oracle_agreement.has_value()) return -1;
  return *a->report.oracle_agreement ? 1 : 0;
}

const char* d2g_analysis_branch(const d2g_analysis* a) {
  if (a == nullptr) return nullptr;
  return d2g::branch_name(a->report.outcome.branch).data();
}

d2g_status d2g_analysis_json(const d2g_analysis* a, char** out) {
  if (a == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st = guarded([&] { text = d2g::report_json(a->report); });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

d2g_status d2g_analysis_text(const d2g_analysis* a, int color, char** out) {
  if (a == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st =
      guarded([&] { text = d2g::report_text(a->report, color != 0); });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

d2g_status d2g_verify_range(int32_t min_n, int32_t max_n, int32_t jobs,
                            d2g_census** out) {
  if (out == nullptr) return invalid("null argument");
  return guarded([&] {
    d2g::CensusOptions options;
    options.jobs = jobs;
    *out = new d2g_census{d2g::run_census_range(min_n, max_n, options)};
  });
}

d2g_status d2g_verify_graph6_text(const char* text, int32_t jobs,
                                  d2g_census** out) {
  if (text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    std::vector<d2g::Graph> graphs = parse_graph6_lines(text);
    d2g::CensusOptions options;
    options.jobs = jobs;
    *out = new d2g_census{d2g::run_census(graphs, options)};
  });
}

int64_t d2g_census_failures(const d2g_census* c) {
  return c == nullptr ? -1
                      : static_cast<int64_t>(c->report.failures.size());
}

d2g_status d2g_census_json(const d2g_census* c, char** out) {
  if (c == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st = guarded([&] { text = d2g::census_json(c->report); });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

d2g_status d2g_census_text(const d2g_census* c, char** out) {
  if (c == nullptr || out == nullptr) return invalid("null argument");
  std::string text;
  d2g_status st = guarded([&] { text = d2g::census_text(c->report); });
  if (st != D2G_OK) return st;
  return copy_out(text, out);
}

}  // extern "C"
