#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "d2graph/graph.hpp"
#include "doctest.h"

namespace fixtures {

inline d2g::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return d2g::Graph::from_edges(n, edges);
}

inline d2g::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return d2g::Graph::from_edges(n, edges);
}

inline d2g::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return d2g::Graph::from_edges(n, edges);
}

/// K(1,leaves) with the center at index 0.
inline d2g::Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return d2g::Graph::from_edges(leaves + 1, edges);
}

inline d2g::Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);      // outer cycle
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    edges.emplace_back(v, 5 + v);            // spokes
  }
  return d2g::Graph::from_edges(10, edges);
}

/// 4-cycle a-b-c-d with indices 0..3.
inline d2g::Graph c4_fixture() { return cycle_graph(4); }

/// K4 minus the edge {0,2}: vertices a,b,c,d = 0..3.
inline d2g::Graph diamond_fixture() {
  return d2g::Graph::from_edges(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

/// 8-vertex fixture with one big fine class. Indices follow the label order
/// a,b,c,d,x,y,u,v.
inline const char* kTrap8EdgeText =
    "a b\na c\na d\nb c\nb d\nc d\nc x\nx y\ny d\nx d\nd u\nu v\n";

inline d2g::Graph trap8_fixture() {
  return d2g::Graph::from_edges(8, {{0, 1},
                                    {0, 2},
                                    {0, 3},
                                    {1, 2},
                                    {1, 3},
                                    {2, 3},
                                    {2, 4},
                                    {4, 5},
                                    {5, 3},
                                    {4, 3},
                                    {3, 6},
                                    {6, 7}});
}

inline d2g::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return d2g::Graph::from_edges(n, edges);
}

inline d2g::Graph permuted(const d2g::Graph& g, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) perm[static_cast<std::size_t>(v)] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) {
        edges.emplace_back(perm[static_cast<std::size_t>(u)],
                           perm[static_cast<std::size_t>(v)]);
      }
    }
  }
  return d2g::Graph::from_edges(g.order(), edges);
}

/// All-pairs shortest paths by Floyd-Warshall; -1 means unreachable.
inline std::vector<std::vector<int>> floyd_distances(const d2g::Graph& g) {
  int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(
      static_cast<std::size_t>(n),
      std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        int via = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] +
                  d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
        if (via < d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = via;
        }
      }
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

/// Brute force over all 2^n colorings.
inline bool naive_two_colorable(const d2g::Graph& g) {
  int n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool proper = true;
    for (int u = 0; u < n && proper; ++u) {
      for (int v = u + 1; v < n && proper; ++v) {
        if (g.has_edge(u, v) && (((mask >> u) ^ (mask >> v)) & 1) == 0) {
          proper = false;
        }
      }
    }
    if (proper) return true;
  }
  return false;
}

/// Literal definition: all members share the same nonempty outside
/// neighborhood.
inline bool naive_is_fine(const d2g::Graph& g, const std::vector<int>& a) {
  std::set<int> inside(a.begin(), a.end());
  std::set<std::set<int>> views;
  for (int x : a) {
    std::set<int> view;
    for (int v = 0; v < g.order(); ++v) {
      if (g.has_edge(x, v) && inside.count(v) == 0) view.insert(v);
    }
    views.insert(std::move(view));
  }
  return views.size() == 1 && !views.begin()->empty();
}

inline bool naive_is_module(const d2g::Graph& g, const d2g::VertexSet& s) {
  std::vector<int> inside = s.to_vector();
  for (int v = 0; v < g.order(); ++v) {
    if (s.test(v)) continue;
    int seen = 0;
    for (int x : inside) {
      if (g.has_edge(v, x)) ++seen;
    }
    if (seen != 0 && seen != static_cast<int>(inside.size())) return false;
  }
  return true;
}

template <typename F>
d2g::ErrorCode code_of(F&& body) {
  try {
    body();
  } catch (const d2g::Error& e) {
    return e.code();
  }
  FAIL("expected the call to raise an error");
  return d2g::ErrorCode::internal_consistency;
}

}  // namespace fixtures
