#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "d2graph/graph.hpp"
#include "d2graph/metrics.hpp"

namespace d2g {

struct FineCheck {
  bool fine = false;
  /// Common outside neighborhood N(A) \ A (meaningful for any input set).
  VertexSet external;
  /// When not fine for neighborhood reasons: a member whose outside
  /// neighborhood differs, plus an outside vertex witnessing the difference.
  std::optional<std::pair<int, int>> violation;
};

/// Tests whether every member of `a` sees exactly the same nonempty set of
/// outside vertices.
FineCheck is_fine(const Graph& g, const VertexSet& a);

/// Smallest vertex set containing `seed` whose members all agree on their
/// outside neighborhood (splitter-closure construction). May be the whole
/// vertex set.
VertexSet minimal_module(const Graph& g, const VertexSet& seed);

/// Partition of a connected graph of diameter >= 3 into its maximal fine
/// sets. Results are cross-checked internally; inconsistencies raise
/// internal-consistency errors.
Partition maximal_fine_partition(const Graph& g);

namespace detail {
/// maximal_fine_partition without the precondition scans, for callers that
/// have already established connectivity and diameter >= 3 on `g` and hold
/// its adjacency lists.
Partition maximal_fine_partition_preverified(const Graph& g,
                                             const AdjList& adj);
}  // namespace detail

struct QuotientGraph {
  Graph quotient;
  Partition partition;
  /// class_of[v] = quotient vertex holding v.
  std::vector<int> class_of;
};

/// Collapses each class to one vertex; classes are adjacent when any of their
/// members are.
QuotientGraph contract(const Graph& g, Partition partition);

namespace detail {
/// contract driven by prebuilt adjacency lists instead of row scans.
QuotientGraph contract_with_adj(const Graph& g, Partition partition,
                                const AdjList& adj);
}  // namespace detail

/// contract(g, maximal_fine_partition(g)).
QuotientGraph hat_graph(const Graph& g);

/// All maximal fine sets by exhaustive subset search. Exponential; guarded by
/// `max_n`.
std::vector<VertexSet> maximal_fine_sets_bruteforce(const Graph& g,
                                                    int max_n = 12);

}  // namespace d2g
