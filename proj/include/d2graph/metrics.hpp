#pragma once

#include <variant>
#include <vector>

#include "d2graph/graph.hpp"

namespace d2g {

/// Distance value used for unreachable vertices.
inline constexpr int kUnreachable = -1;

/// Partition of {0..n-1} in canonical form: members of each class ascending,
/// classes ordered by their smallest member.
struct Partition {
  std::vector<std::vector<int>> classes;

  static Partition singletons(int n);
  /// Sorts members and classes into canonical form.
  void canonicalize();
  int class_count() const { return static_cast<int>(classes.size()); }
  /// Sum of class sizes.
  int total() const;
  /// True when the classes are disjoint, nonempty, and cover {0..n-1}.
  bool is_partition_of(int n) const;
  /// Vertex -> class index map; requires is_partition_of(n).
  std::vector<int> index_map(int n) const;

  bool operator==(const Partition&) const = default;
};

std::vector<int> bfs_distances(const Graph& g, int source);

Partition connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Longest shortest-path distance. 0 for a one-vertex graph.
int diameter(const Graph& g);

bool is_complete(const Graph& g);

/// True when every vertex pair is at distance <= 2 (false on disconnected
/// input). Assumes n >= 1.
bool diameter_at_most_two(const Graph& g);

struct TwoColoring {
  /// side[v] in {0,1}; side[0] == 0.
  std::vector<std::uint8_t> side;
};

/// Closed walk of odd length as a vertex sequence; front() == back().
using OddClosedWalk = std::vector<int>;

struct BipartitenessResult {
  std::variant<TwoColoring, OddClosedWalk> value;

  bool bipartite() const { return std::holds_alternative<TwoColoring>(value); }
  const TwoColoring& coloring() const { return std::get<TwoColoring>(value); }
  const OddClosedWalk& odd_walk() const {
    return std::get<OddClosedWalk>(value);
  }
};

/// Two-colors a connected graph or returns an explicit odd closed walk.
BipartitenessResult bipartite_certificate(const Graph& g);

/// Connected components of the complement graph, without materializing it.
/// Runs in O(n + m) time.
Partition complement_components(const Graph& g);

}  // namespace d2g
