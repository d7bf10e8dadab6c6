#include "permgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "permgraph/error.hpp"

namespace permgraph {

Graph::Graph(int order, std::span<const Edge> edges) : order_(order) {
  if (order < 0) {
    throw MalformedInput("graph order must be non-negative, got " +
                         std::to_string(order));
  }
  const auto n = static_cast<std::size_t>(order);
  adjacency_.resize(n);
  matrix_.assign(n * n, 0);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > order || e.v < 1 || e.v > order) {
      throw MalformedInput("edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") has an endpoint outside 1.." +
                           std::to_string(order));
    }
    if (e.u == e.v) {
      throw MalformedInput("self-loop at vertex " + std::to_string(e.u));
    }
    if (matrix_[index(e.u, e.v)] != 0) continue;
    matrix_[index(e.u, e.v)] = 1;
    matrix_[index(e.v, e.u)] = 1;
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
    ++edge_count_;
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& row : adjacency_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

int Graph::min_degree() const noexcept {
  if (order_ == 0) return 0;
  int best = order_;
  for (const auto& row : adjacency_) best = std::min(best, static_cast<int>(row.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= order_; ++u) {
    for (Vertex v : adjacency_[u - 1]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const auto& row : adjacency_) out.push_back(static_cast<int>(row.size()));
  std::sort(out.rbegin(), out.rend());
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 1) {
    throw MalformedInput("graph order must be positive, got " + std::to_string(n));
  }
  return Graph(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw MalformedInput("induced subgraph of an empty vertex set");
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw MalformedInput("vertex set contains a repeated vertex");
  }
  for (Vertex v : sorted) {
    if (!g.contains(v)) {
      throw MalformedInput("vertex " + std::to_string(v) + " is outside 1.." +
                           std::to_string(g.order()));
    }
  }
  std::vector<Edge> edges;
  const int k = static_cast<int>(sorted.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(sorted[i], sorted[j])) edges.push_back({i + 1, j + 1});
    }
  }
  return Graph(k, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> image) {
  if (static_cast<int>(image.size()) != g.order()) {
    throw MalformedInput("relabelling has the wrong length");
  }
  std::vector<char> seen(image.size() + 1, 0);
  for (Vertex v : image) {
    if (v < 1 || v > g.order() || seen[v]) {
      throw MalformedInput("relabelling is not a bijection");
    }
    seen[v] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({image[e.u - 1], image[e.v - 1]});
  return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return connected_components(g).size() == 1;
}

bool is_regular(const Graph& g, int r) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != r) return false;
  }
  return true;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  for (Vertex w = 1; w <= g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 0) return false;
  if (g.size() != static_cast<std::size_t>(g.order() - 1)) return false;
  if (g.max_degree() > 2) return false;
  return is_connected(g);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw MalformedInput("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n, 1});
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= a; ++u)
    for (Vertex v = a + 1; v <= a + b; ++v) edges.push_back({u, v});
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i + 1, (i + 1) % 5 + 1});          // outer 5-cycle
    edges.push_back({i + 1, i + 6});                    // spokes
    edges.push_back({i + 6, (i + 2) % 5 + 6});          // inner pentagram
  }
  return Graph(10, edges);
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (int x = 0; x < 8; ++x) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      int y = x ^ bit;
      if (x < y) edges.push_back({x + 1, y + 1});
    }
  }
  return Graph(8, edges);
}

Graph ladder_graph(int rungs) {
  if (rungs < 1) throw MalformedInput("a ladder needs at least one rung");
  std::vector<Edge> edges;
  for (int i = 1; i <= rungs; ++i) {
    edges.push_back({2 * i - 1, 2 * i});
    if (i < rungs) {
      edges.push_back({2 * i - 1, 2 * i + 1});
      edges.push_back({2 * i, 2 * i + 2});
    }
  }
  return Graph(2 * rungs, edges);
}

Graph ladder_graph_perimeter(int rungs) {
  if (rungs < 1) throw MalformedInput("a ladder needs at least one rung");
  const int n = 2 * rungs;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  // u_i = i, v_i = n + 1 - i
  for (int i = 1; i <= rungs; ++i) edges.push_back({i, n + 1 - i});
  return Graph(n, edges);
}

}  // namespace permgraph
