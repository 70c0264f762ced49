#include "d2graph/d2.hpp"

namespace d2g {

namespace {

/// Rows of neighbors-of-neighbors unions; shared by both constructions.
std::vector<std::uint64_t> two_step_rows(const Graph& g) {
  int n = g.order();
  int words = g.word_count();
  std::vector<std::uint64_t> rows =
      detail::zeroed_row_buffer(static_cast<std::size_t>(n) * words);
  for (int v = 0; v < n; ++v) {
    std::uint64_t* dst = rows.data() + static_cast<std::size_t>(v) * words;
    for_each_bit(g.row(v), [&](int u) {
      auto urow = g.row(u);
      for (int w = 0; w < words; ++w) dst[w] |= urow[w];
    });
  }
  return rows;
}

}  // namespace

Graph distance2_graph(const Graph& g) {
  int n = g.order();
  int words = g.word_count();
  std::vector<std::uint64_t> rows = two_step_rows(g);
  for (int v = 0; v < n; ++v) {
    std::uint64_t* dst = rows.data() + static_cast<std::size_t>(v) * words;
    auto adj = g.row(v);
    for (int w = 0; w < words; ++w) dst[w] &= ~adj[w];
    dst[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph square_graph(const Graph& g) {
  int n = g.order();
  int words = g.word_count();
  std::vector<std::uint64_t> rows = two_step_rows(g);
  for (int v = 0; v < n; ++v) {
    std::uint64_t* dst = rows.data() + static_cast<std::size_t>(v) * words;
    auto adj = g.row(v);
    for (int w = 0; w < words; ++w) dst[w] |= adj[w];
    dst[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  return Graph::from_rows(n, std::move(rows));
}

D2Connectivity d2_connectivity_oracle(const Graph& g) {
  if (g.order() == 0) {
    throw Error(ErrorCode::empty_graph,
                "distance-2 connectivity is undefined for the empty graph");
  }
  Graph d2 = distance2_graph(g);
  Partition components = connected_components(d2);
  return {components.class_count() == 1, std::move(components)};
}

}  // namespace d2g
