#include "permgraph/forbidden_catalog.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "permgraph/error.hpp"
#include "permgraph/graph_io.hpp"
#include "permgraph/graph_search.hpp"
#include "permgraph/permutation.hpp"

namespace permgraph {
namespace {

// Regenerate with `permgraph catalog 8`.
constexpr std::string_view kBuiltinCatalog = R"(# permgraph forbidden induced subgraphs, maximum degree 3
# max_order_searched: 8
EqoG
Eqog
Eqlo
FsO__
FsOb?
FsObO
)";

bool is_cycle(const Graph& g) {
  return g.order() >= 3 && is_regular(g, 2) && is_connected(g);
}

void sort_canonically(std::vector<Graph>& graphs) {
  std::stable_sort(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
    return std::make_tuple(a.order(), a.size(), a.degree_sequence(), encode_graph6(a)) <
           std::make_tuple(b.order(), b.size(), b.degree_sequence(), encode_graph6(b));
  });
}

}  // namespace

std::vector<Graph> connected_graphs_bounded_degree(int n, int max_degree) {
  if (n < 1) throw MalformedInput("graph order must be positive");
  std::vector<Graph> level{empty_graph(1)};
  for (int k = 1; k < n; ++k) {
    IsomorphismClasses next;
    for (const Graph& g : level) {
      std::vector<Vertex> open;
      for (Vertex v = 1; v <= k; ++v)
        if (g.degree(v) < max_degree) open.push_back(v);
      const int limit = std::min<int>(max_degree, static_cast<int>(open.size()));
      const std::size_t subsets = std::size_t{1} << open.size();
      std::vector<Edge> base = g.edges();
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        if (__builtin_popcountll(mask) > limit) continue;
        std::vector<Edge> edges = base;
        for (std::size_t i = 0; i < open.size(); ++i)
          if (mask >> i & 1) edges.push_back({open[i], k + 1});
        next.insert(Graph(k + 1, edges));
      }
    }
    level = next.graphs();
  }
  return level;
}

ForbiddenCatalog derive_forbidden_catalog(int max_order) {
  if (max_order > kCatalogMaxOrderLimit) {
    throw CapacityError("catalog derivation is bounded to order " +
                        std::to_string(kCatalogMaxOrderLimit) + ", got " +
                        std::to_string(max_order));
  }
  ForbiddenCatalog catalog;
  catalog.max_order_searched = max_order;
  for (int n = 1; n <= max_order; ++n) {
    for (const Graph& g : connected_graphs_bounded_degree(n, 3)) {
      if (is_cycle(g) && n >= 5) continue;
      if (is_permutation_graph(g, kCatalogMaxOrderLimit)) continue;
      bool minimal = true;
      for (Vertex drop = 1; drop <= n && minimal; ++drop) {
        VertexSet keep;
        for (Vertex v = 1; v <= n; ++v)
          if (v != drop) keep.push_back(v);
        minimal = is_permutation_graph(induced_subgraph(g, keep), kCatalogMaxOrderLimit);
      }
      if (minimal) catalog.graphs.push_back(g);
    }
  }
  sort_canonically(catalog.graphs);
  return catalog;
}

const ForbiddenCatalog& builtin_forbidden_catalog() {
  static const ForbiddenCatalog catalog = read_catalog(kBuiltinCatalog);
  return catalog;
}

std::string write_catalog(const ForbiddenCatalog& catalog) {
  std::ostringstream out;
  out << "# permgraph forbidden induced subgraphs, maximum degree 3\n";
  out << "# max_order_searched: " << catalog.max_order_searched << '\n';
  for (const Graph& g : catalog.graphs) out << encode_graph6(g) << '\n';
  return out.str();
}

ForbiddenCatalog read_catalog(std::string_view text) {
  constexpr std::string_view kKey = "max_order_searched:";
  const std::size_t at = text.find(kKey);
  if (at == std::string_view::npos) {
    throw ParseError("catalog is missing its max_order_searched header", 0);
  }
  ForbiddenCatalog catalog;
  std::istringstream header{std::string(text.substr(at + kKey.size(), 16))};
  if (!(header >> catalog.max_order_searched)) {
    throw ParseError("catalog max_order_searched is not an integer", at + kKey.size());
  }
  catalog.graphs = read_graph6_lines(text);
  return catalog;
}

bool is_cubic_permutation_graph_fast(const Graph& g, const ForbiddenCatalog& catalog) {
  if (g.max_degree() > 3) {
    throw DomainError("catalog recognizer only applies to graphs of maximum degree <= 3");
  }
  if (catalog.max_order_searched < kCatalogMaxOrderLimit) {
    throw DomainError("catalog recognizer needs a catalog searched to order >= 8");
  }
  if (has_large_hole(g)) return false;
  for (const Graph& f : catalog.graphs) {
    if (f.order() <= g.order() && contains_induced(g, f)) return false;
  }
  return true;
}

}  // namespace permgraph
