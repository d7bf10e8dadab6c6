#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace permgraph {

// Vertices are 1-based: a graph of order n has vertices 1..n.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted subset of the vertex range of some graph.
using VertexSet = std::vector<Vertex>;

// Simple undirected graph, immutable after construction.
//
// Stores sorted neighbour lists together with a dense adjacency matrix so
// that adjacency queries are O(1); every graph in this library is small.
class Graph {
 public:
  Graph() = default;

  // Throws MalformedInput on a negative order, an endpoint outside 1..n or a
  // self-loop. Duplicate pairs (in either orientation) are collapsed.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return matrix_[index(u, v)] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const noexcept {
    return adjacency_[v - 1];
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(adjacency_[v - 1].size());
  }
  int max_degree() const noexcept;
  int min_degree() const noexcept;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= order_; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.order_ == b.order_ && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(v - 1);
  }

  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

// Validating constructor used at API boundaries; n must be positive.
Graph build_graph(int n, std::span<const Edge> edges);

Graph complement(const Graph& g);

// Subgraph induced by `s`, relabelled 1..|s| in increasing order of `s`.
// Throws MalformedInput when `s` is empty or out of range.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Graph with vertex v renamed to image[v - 1]; `image` must be a bijection
// onto 1..n.
Graph relabel(const Graph& g, std::span<const Vertex> image);

Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_regular(const Graph& g, int r);

// N(u) - {v} == N(v) - {u}.
bool are_twins(const Graph& g, Vertex u, Vertex v);

// Path 1-2-...-n.
bool is_path_graph(const Graph& g);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph petersen_graph();
Graph cube_graph();

// P2 x Pk with rung i on vertices (2i-1, 2i); sides are the odd and the even
// vertices.
Graph ladder_graph(int rungs);

// The same ladder labelled along the Hamiltonian path that starts and ends on
// degree-2 vertices: u1..uk then vk..v1.
Graph ladder_graph_perimeter(int rungs);

}  // namespace permgraph
