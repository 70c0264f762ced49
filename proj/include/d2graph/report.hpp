#pragma once

#include <optional>
#include <string>
#include <vector>

#include "d2graph/characterize.hpp"
#include "d2graph/io.hpp"
#include "d2graph/verify.hpp"

namespace d2g {

struct AnalyzeOptions {
  bool with_oracle = false;
  /// Guard for the brute-force cross-check; larger inputs are refused.
  int oracle_max_n = 4096;
};

struct AnalysisReport {
  int n = 0;
  std::int64_t m = 0;
  bool connected = false;
  /// Absent when disconnected, or when the graph is too large for an exact
  /// computation (quotient order above the guard).
  std::optional<int> diameter;
  DecisionOutcome outcome;
  std::optional<bool> oracle_agreement;
  std::vector<std::string> labels;
};

AnalysisReport analyze_graph(const LabeledGraph& lg,
                             const AnalyzeOptions& options = {});

/// Byte-stable JSON (sorted keys, fixed indentation, trailing newline).
std::string report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r, bool color);

std::string census_json(const CensusReport& r);
std::string census_text(const CensusReport& r);

/// Fine partition of a labeled graph as a JSON array of label arrays.
std::string partition_json(const Partition& p,
                           const std::vector<std::string>& labels);

/// "{a,b,c}" style display name for one class.
std::string class_label(const std::vector<int>& members,
                        const std::vector<std::string>& labels);

}  // namespace d2g
