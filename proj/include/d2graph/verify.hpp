#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "d2graph/characterize.hpp"
#include "d2graph/d2.hpp"
#include "d2graph/graph.hpp"

namespace d2g {

/// Graph for one bitmask over the upper-triangle pairs in column order
/// (0,1),(0,2),(1,2),(0,3),...; the same order graph6 uses.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Calls `fn` for every connected labeled graph of order n, in ascending
/// mask order. Guarded to n <= 7.
void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&)>& fn);

bool validate_component_split(const Graph& g, const ComponentSplit& c,
                              std::string* why = nullptr);
bool validate_spanning_bipartite(const Graph& g, const SpanningBipartite& c,
                                 std::string* why = nullptr);
bool validate_lifted_coloring(const Graph& g, const LiftedColoring& c,
                              std::string* why = nullptr);
bool validate_odd_walk_in_quotient(const Graph& g, const QuotientGraph& q,
                                   const OddWalkInQuotient& c,
                                   std::string* why = nullptr);

/// Checks the certificate against the base graph from scratch, including
/// branch/certificate-shape conformance.
bool validate_certificate(const Graph& g, const DecisionOutcome& outcome,
                          std::string* why = nullptr);

struct CheckResult {
  std::string_view id;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::string graph6;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::vector<std::string> failed_ids() const;
};

/// Runs every check applicable to g's structure (connectivity and diameter
/// class) and reports per-check outcomes.
TheoremReport check_theorems(const Graph& g);
TheoremReport check_theorems(const Graph& g, const DecisionOutcome& outcome);

/// True when g holds an induced subgraph from the forcing family such that no
/// closed neighborhood N[x] covers it; such a graph always has a connected
/// distance-2 graph. Exhaustive subset search, guarded to n <= 10.
bool induced_family_sufficiency(const Graph& g);

struct CensusReport {
  std::map<std::string, std::int64_t> branch_totals;
  std::int64_t graphs_processed = 0;
  std::int64_t connected_inputs = 0;
  std::int64_t disconnected_inputs = 0;
  std::int64_t d2_connected = 0;
  std::int64_t d2_disconnected = 0;
  struct Failure {
    std::string graph6;
    std::vector<std::string> checks;

    bool operator==(const Failure&) const = default;
  };
  std::vector<Failure> failures;
  double wall_seconds = 0;
};

struct CensusOptions {
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 1;
};

/// Enumerates all connected graphs with min_n <= n <= max_n and runs the
/// theorem suite on each. Aggregation is deterministic for any job count.
CensusReport run_census_range(int min_n, int max_n,
                              const CensusOptions& options = {});

/// Same suite over caller-supplied graphs; disconnected entries are counted
/// and branch-classified but not theorem-checked.
CensusReport run_census(const std::vector<Graph>& graphs,
                        const CensusOptions& options = {});

}  // namespace d2g
