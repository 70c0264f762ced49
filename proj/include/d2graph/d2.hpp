#pragma once

#include "d2graph/graph.hpp"
#include "d2graph/metrics.hpp"

namespace d2g {

/// Graph on the same vertices whose edges are the pairs at distance exactly 2,
/// built from common-neighbor row intersections.
Graph distance2_graph(const Graph& g);

/// Graph on the same vertices whose edges are the pairs at distance 1 or 2.
Graph square_graph(const Graph& g);

struct D2Connectivity {
  bool connected;
  Partition components;
};

/// Ground-truth answer: builds the distance-2 graph and takes its components.
D2Connectivity d2_connectivity_oracle(const Graph& g);

}  // namespace d2g
