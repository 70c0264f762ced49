#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>

#include "d2graph/fine.hpp"
#include "d2graph/graph.hpp"
#include "d2graph/metrics.hpp"

namespace d2g {

enum class Branch {
  trivial_k1,
  disconnected_input,
  complete_graph,
  diameter_2,
  diameter_3_plus,
};

std::string_view branch_name(Branch b);

/// Distance-2 components split along these classes.
struct ComponentSplit {
  Partition components;
};

/// Every side_a vertex is adjacent to every side_b vertex, so no distance-2
/// pair crosses between the sides.
struct SpanningBipartite {
  VertexSet side_a;
  VertexSet side_b;
};

/// Proper 2-coloring of the quotient pulled back to the base vertices; no
/// distance-2 pair crosses between the sides.
struct LiftedColoring {
  VertexSet side0;
  VertexSet side1;
};

/// Odd closed walk through quotient vertices (front == back), certifying the
/// quotient is not bipartite.
struct OddWalkInQuotient {
  std::vector<int> walk;
};

using Certificate = std::variant<std::monostate, ComponentSplit,
                                 SpanningBipartite, LiftedColoring,
                                 OddWalkInQuotient>;

struct DecisionOutcome {
  Branch branch;
  bool d2_connected = false;
  Certificate certificate;
  /// Present on the diameter-3-plus branch.
  std::optional<QuotientGraph> quotient;
};

/// Decides distance-2 connectivity structurally (no distance-2 graph is
/// built) and attaches a checkable certificate.
DecisionOutcome decide_d2_connectivity(const Graph& g);

/// For a graph of diameter exactly 2: the complement split as a spanning
/// complete bipartite witness, or nullopt when the complement is connected.
std::optional<SpanningBipartite> spanning_bipartite_witness(const Graph& g);

/// Pulls a proper 2-coloring of the quotient back to base vertices.
std::pair<VertexSet, VertexSet> lift_coloring(
    const QuotientGraph& q, std::span<const std::uint8_t> side);

/// Graphs whose presence as a suitable induced subgraph forces distance-2
/// connectivity: odd cycles of order >= 5 plus three fixed small graphs.
enum class FamilyKind { odd_cycle, bull, house, apex, none };

std::string_view family_kind_name(FamilyKind k);

struct FamilyMatch {
  FamilyKind kind = FamilyKind::none;
  /// Cycle length when kind == odd_cycle, else 0.
  int cycle_length = 0;
};

FamilyMatch classify_family_member(const Graph& g);

const Graph& bull_graph();
const Graph& house_graph();
const Graph& apex_graph();

/// Exact isomorphism by pruned backtracking; intended for small graphs.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace d2g
