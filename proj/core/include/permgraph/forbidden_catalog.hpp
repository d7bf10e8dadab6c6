#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permgraph/graph.hpp"

namespace permgraph {

inline constexpr int kCatalogMaxOrderLimit = 8;

// Minimal non-permutation graphs with maximum degree <= 3, other than cycles
// of length >= 5, found by exhaustive search up to max_order_searched
// vertices. Nothing is claimed about larger orders.
struct ForbiddenCatalog {
  std::vector<Graph> graphs;
  int max_order_searched = 0;
};

// All connected graphs on n vertices with maximum degree <= max_degree, one
// per isomorphism class. Built by vertex extension: every such graph on n
// vertices arises from one on n - 1 vertices by adding a vertex, since a
// connected graph always has a non-cut vertex.
std::vector<Graph> connected_graphs_bounded_degree(int n, int max_degree);

// Throws CapacityError when max_order exceeds kCatalogMaxOrderLimit.
ForbiddenCatalog derive_forbidden_catalog(int max_order);

// The catalog shipped with the library (derived with max order 8).
const ForbiddenCatalog& builtin_forbidden_catalog();

// One graph6 string per line after a "# max_order_searched: N" header.
std::string write_catalog(const ForbiddenCatalog& catalog);
ForbiddenCatalog read_catalog(std::string_view text);

// Permutation-graph test for maximum degree <= 3: no large hole and no
// induced catalog member. Throws DomainError if the graph has a vertex of
// degree > 3 or the catalog was searched below order 8.
bool is_cubic_permutation_graph_fast(const Graph& g, const ForbiddenCatalog& catalog);

}  // namespace permgraph
