#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "d2graph/error.hpp"

namespace d2g {

/// Subset of a fixed vertex universe {0..n-1}, packed 64 vertices per word.
/// Unused high bits of the last word are kept zero so equality is wordwise.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet full(int universe);
  static VertexSet of(int universe, std::initializer_list<int> vertices);
  static VertexSet from_words(int universe, std::span<const std::uint64_t> words);

  int universe() const { return n_; }
  int count() const;
  bool empty() const;
  bool test(int v) const;
  void set(int v);
  void reset(int v);
  void clear();

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  /// Removes every member of `o` from this set.
  VertexSet& operator-=(const VertexSet& o);
  /// Flips membership of every universe vertex.
  void complement_in_place();

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  /// Smallest member, or -1 when empty.
  int first() const;
  /// Smallest member greater than v, or -1 when none.
  int next_after(int v) const;

  std::vector<int> to_vector() const;

  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Iterates members of a packed bit row in ascending order.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    std::uint64_t w = words[wi];
    while (w != 0) {
      int b = __builtin_ctzll(w);
      f(static_cast<int>(wi * 64) + b);
      w &= w - 1;
    }
  }
}

template <typename F>
void for_each_member(const VertexSet& s, F&& f) {
  for_each_bit(s.words(), std::forward<F>(f));
}

/// Immutable finite simple graph on vertices {0..n-1}. Adjacency is stored as
/// bit-packed rows; the matrix is symmetric with a zero diagonal, and the edge
/// count is derived during construction.
class Graph {
 public:
  Graph() = default;

  /// Validates endpoints, rejects self-loops, deduplicates repeated pairs.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);
  /// Builds from prepared rows (n * word_count(n) words). The diagonal must be
  /// zero and the matrix symmetric; callers are trusted, cheap checks only.
  /// Passing the known edge count skips the counting scan over the rows.
  static Graph from_rows(int n, std::vector<std::uint64_t> rows,
                         std::int64_t edge_count = -1);

  int order() const { return n_; }
  std::int64_t size() const { return m_; }
  int word_count() const { return words_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::span<const std::uint64_t> row(int v) const;
  VertexSet neighbors(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline int word_count_for(int n) { return n <= 0 ? 0 : (n + 63) / 64; }

namespace detail {
/// Zero-filled row buffer; large buffers are mapped with huge pages where the
/// platform allows, which matters when building graphs past ~10^4 vertices.
std::vector<std::uint64_t> zeroed_row_buffer(std::size_t words);

/// Flat adjacency lists; each neighbor run is ascending. Built once and
/// shared where scanning the packed rows repeatedly would dominate.
struct AdjList {
  std::vector<std::int64_t> start;  // n + 1 offsets into flat
  std::vector<int> flat;
  std::span<const int> neighbors(int v) const {
    return {flat.data() + start[static_cast<std::size_t>(v)],
            static_cast<std::size_t>(start[static_cast<std::size_t>(v) + 1] -
                                     start[static_cast<std::size_t>(v)])};
  }
};

/// One pass over the rows of `g`.
AdjList build_adjacency(const Graph& g);
}  // namespace detail

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// vertices[i] is the original index of subgraph vertex i (ascending).
  std::vector<int> vertices;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace d2g
