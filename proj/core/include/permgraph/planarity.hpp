#pragma once

#include "permgraph/graph.hpp"

namespace permgraph {

// Planarity by incremental face embedding (Demoucron, Malgrange and
// Pertuiset), applied to every biconnected block. Quadratic-ish; intended
// for small graphs.
bool is_planar(const Graph& g);

}  // namespace permgraph
