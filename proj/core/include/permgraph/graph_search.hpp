#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permgraph/graph.hpp"

namespace permgraph {

// Order bounds for the exponential searches. Exceeding one raises
// CapacityError; nothing is silently truncated.
inline constexpr int kDefaultIsomorphismMaxOrder = 64;
inline constexpr int kDefaultHamiltonianMaxOrder = 20;

// A vertex bijection: mapping[v - 1] is the image of v.
using VertexMap = std::vector<Vertex>;

// Backtracking isomorphism test with colour-refinement pruning. The returned
// map sends edges of `g` to edges of `h` and non-edges to non-edges.
std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h,
                                        int max_order = kDefaultIsomorphismMaxOrder);

// True iff `map` is an isomorphism from g onto h.
bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& map);

// A vertex set S of `g` with g[S] isomorphic to `pattern`.
std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern);

// Injective map of pattern vertices into `g` preserving pattern edges; extra
// edges of `g` are allowed.
std::optional<VertexMap> find_subgraph(const Graph& g, const Graph& pattern);

// Vertex set of an induced cycle of length >= 5, if one exists.
std::optional<VertexSet> has_large_hole(const Graph& g);

// Embedding of ladder_graph(rungs) as a (not necessarily induced) subgraph.
std::optional<VertexMap> has_ladder_subgraph(const Graph& g, int rungs);

// Exact Hamiltonian path search (bitmask dynamic programming).
std::optional<std::vector<Vertex>> hamiltonian_path_bruteforce(
    const Graph& g, int max_order = kDefaultHamiltonianMaxOrder);

bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path);

// Isomorphism-invariant fingerprint (degrees, triangles, distance profile).
std::string invariant_key(const Graph& g);

// Set of graphs up to isomorphism. Graphs are bucketed by invariant_key and
// compared with are_isomorphic inside a bucket; insertion order is kept.
class IsomorphismClasses {
 public:
  // Returns true if `g` was not isomorphic to any member.
  bool insert(const Graph& g);
  bool contains(const Graph& g) const;

  const std::vector<Graph>& graphs() const noexcept { return graphs_; }
  std::size_t size() const noexcept { return graphs_.size(); }

 private:
  std::vector<Graph> graphs_;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets_;
};

}  // namespace permgraph
