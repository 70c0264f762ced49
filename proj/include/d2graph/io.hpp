#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "d2graph/graph.hpp"
#include "d2graph/metrics.hpp"

namespace d2g {

/// Graph plus one distinct display label per vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

/// Attaches decimal labels "0".."n-1".
LabeledGraph make_labeled(Graph g);
/// Attaches the given labels; they must be distinct and match the order.
LabeledGraph make_labeled(Graph g, std::vector<std::string> labels);

/// Decodes one graph6 line (optional ">>graph6<<" header allowed).
Graph parse_graph6(std::string_view line);

/// Encodes as graph6 without a header. Supports n <= 258047.
std::string write_graph6(const Graph& g);

/// Parses a whitespace-tokenized edge list: one edge ("u v") or one isolated
/// vertex ("u") per line; lines starting with '#' are comments. Vertices are
/// indexed by first appearance.
LabeledGraph parse_edge_list(std::string_view text);

std::string write_edge_list(const LabeledGraph& lg);

/// Renders Graphviz DOT. When `partition` is given its classes become
/// clusters, tinted from a fixed 12-color palette.
std::string write_dot(const LabeledGraph& lg,
                      const Partition* partition = nullptr);

}  // namespace d2g
