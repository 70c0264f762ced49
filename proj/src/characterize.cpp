#include "d2graph/characterize.hpp"

#include <algorithm>

namespace d2g {

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::trivial_k1: return "trivial-K1";
    case Branch::disconnected_input: return "disconnected-input";
    case Branch::complete_graph: return "complete-graph";
    case Branch::diameter_2: return "diameter-2";
    case Branch::diameter_3_plus: return "diameter-3-plus";
  }
  return "unknown";
}

std::string_view family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::odd_cycle: return "odd-cycle";
    case FamilyKind::bull: return "bull";
    case FamilyKind::house: return "house";
    case FamilyKind::apex: return "apex-graph";
    case FamilyKind::none: return "none";
  }
  return "unknown";
}

std::optional<SpanningBipartite> spanning_bipartite_witness(const Graph& g) {
  if (g.order() == 0) {
    throw Error(ErrorCode::empty_graph,
                "spanning bipartite witness needs a nonempty graph");
  }
  if (is_complete(g) || !diameter_at_most_two(g)) {
    throw Error(ErrorCode::wrong_diameter,
                "spanning bipartite witness requires diameter exactly 2");
  }
  Partition split = complement_components(g);
  if (split.class_count() < 2) return std::nullopt;

  int n = g.order();
  SpanningBipartite w{VertexSet(n), VertexSet(n)};
  for (int v : split.classes.front()) w.side_a.set(v);
  for (std::size_t c = 1; c < split.classes.size(); ++c) {
    for (int v : split.classes[c]) w.side_b.set(v);
  }
  // Validate member-by-member: each side_a vertex must see all of side_b.
  for_each_member(w.side_a, [&](int a) {
    if (!w.side_b.is_subset_of(g.neighbors(a))) {
      throw Error(ErrorCode::internal_consistency,
                  "complement split is not a spanning complete bipartite "
                  "subgraph");
    }
  });
  return w;
}

std::pair<VertexSet, VertexSet> lift_coloring(
    const QuotientGraph& q, std::span<const std::uint8_t> side) {
  const Graph& h = q.quotient;
  if (static_cast<int>(side.size()) != h.order()) {
    throw Error(ErrorCode::improper_coloring,
                "coloring length does not match quotient order");
  }
  for (int a = 0; a < h.order(); ++a) {
    if (side[static_cast<std::size_t>(a)] > 1) {
      throw Error(ErrorCode::improper_coloring,
                  "coloring values must be 0 or 1");
    }
    for_each_bit(h.row(a), [&](int b) {
      if (side[static_cast<std::size_t>(a)] ==
          side[static_cast<std::size_t>(b)]) {
        throw Error(ErrorCode::improper_coloring,
                    "adjacent quotient vertices share a color");
      }
    });
  }
  int n = static_cast<int>(q.class_of.size());
  std::pair<VertexSet, VertexSet> lifted{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) {
    int cls = q.class_of[static_cast<std::size_t>(v)];
    if (side[static_cast<std::size_t>(cls)] == 0) {
      lifted.first.set(v);
    } else {
      lifted.second.set(v);
    }
  }
  return lifted;
}

DecisionOutcome decide_d2_connectivity(const Graph& g) {
  int n = g.order();
  if (n == 0) {
    throw Error(ErrorCode::empty_graph,
                "distance-2 connectivity is undefined for the empty graph");
  }
  DecisionOutcome out;
  if (n == 1) {
    out.branch = Branch::trivial_k1;
    out.d2_connected = true;
    return out;
  }
  Partition components = connected_components(g);
  if (components.class_count() > 1) {
    out.branch = Branch::disconnected_input;
    out.d2_connected = false;
    out.certificate = ComponentSplit{std::move(components)};
    return out;
  }
  if (is_complete(g)) {
    // No pair is at distance 2, so every vertex is isolated in the
    // distance-2 graph.
    out.branch = Branch::complete_graph;
    out.d2_connected = false;
    out.certificate = ComponentSplit{Partition::singletons(n)};
    return out;
  }
  if (diameter_at_most_two(g)) {
    out.branch = Branch::diameter_2;
    auto witness = spanning_bipartite_witness(g);
    if (witness.has_value()) {
      out.d2_connected = false;
      out.certificate = std::move(*witness);
    } else {
      out.d2_connected = true;
    }
    return out;
  }
  out.branch = Branch::diameter_3_plus;
  // Connectivity and diameter >= 3 are established above, so skip the
  // precondition rescans, and share one adjacency pass between the fine
  // partition and the contraction. Built only on this branch: flat lists
  // take 2m ints, which the shallow branches should not pay on dense inputs.
  detail::AdjList adj = detail::build_adjacency(g);
  QuotientGraph q = detail::contract_with_adj(
      g, detail::maximal_fine_partition_preverified(g, adj), adj);
  BipartitenessResult bip = bipartite_certificate(q.quotient);
  if (bip.bipartite()) {
    auto [side0, side1] = lift_coloring(q, bip.coloring().side);
    out.d2_connected = false;
    out.certificate = LiftedColoring{std::move(side0), std::move(side1)};
  } else {
    out.d2_connected = true;
    out.certificate = OddWalkInQuotient{bip.odd_walk()};
  }
  out.quotient = std::move(q);
  return out;
}

namespace {

bool all_degrees_two(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map,
                    std::vector<char>& used, int next) {
  int n = a.order();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    if (a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.has_edge(prev, next) !=
          b.has_edge(map[static_cast<std::size_t>(prev)], cand)) {
        ok = false;
      }
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = 1;
    if (extend_mapping(a, b, map, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() == 0) return true;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(a.order()), 0);
  return extend_mapping(a, b, map, used, 0);
}

const Graph& bull_graph() {
  // Triangle with two pendant horns on distinct triangle vertices.
  static const Graph g =
      Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
  return g;
}

const Graph& house_graph() {
  // Triangle sharing an edge with a 4-cycle.
  static const Graph g =
      Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {4, 2}});
  return g;
}

const Graph& apex_graph() {
  // 4-path, a triangle on its last edge, and an apex over the path.
  static const Graph g = Graph::from_edges(6, {{0, 1},
                                               {1, 2},
                                               {2, 3},
                                               {2, 4},
                                               {3, 4},
                                               {5, 0},
                                               {5, 1},
                                               {5, 2},
                                               {5, 3}});
  return g;
}

FamilyMatch classify_family_member(const Graph& g) {
  int n = g.order();
  if (n >= 5 && n % 2 == 1 && all_degrees_two(g) && is_connected(g)) {
    return {FamilyKind::odd_cycle, n};
  }
  if (n == 5 && g.size() == 5 && is_isomorphic(g, bull_graph())) {
    return {FamilyKind::bull, 0};
  }
  if (n == 5 && g.size() == 6 && is_isomorphic(g, house_graph())) {
    return {FamilyKind::house, 0};
  }
  if (n == 6 && g.size() == 9 && is_isomorphic(g, apex_graph())) {
    return {FamilyKind::apex, 0};
  }
  return {FamilyKind::none, 0};
}

}  // namespace d2g
