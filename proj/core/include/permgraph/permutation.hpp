#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permgraph/graph.hpp"

namespace permgraph {

inline constexpr int kDefaultRealizerMaxOrder = 12;

// A permutation of 1..n in one-line notation.
class Permutation {
 public:
  // Throws MalformedInput unless `values` is a bijection on 1..n, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  // "[5,4,7,2]" or "5,4,7,2"; whitespace is ignored.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  // 1-based: at(i) is pi(i).
  int at(int position) const noexcept { return values_[position - 1]; }
  const std::vector<int>& values() const noexcept { return values_; }

  Permutation inverse() const;

  std::string to_string() const;  // "[5,4,7,2]"

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Pairs (pi(i), pi(j)) with i < j and pi(i) > pi(j), in order of (i, j).
std::vector<std::pair<int, int>> inversions(const Permutation& pi);

// Vertex i is position i; {i, j} is an edge iff positions i < j are inverted.
Graph graph_from_permutation(const Permutation& pi);

Permutation reverse_permutation(const Permutation& pi);

// Witness that a graph is a permutation graph: vertex v sits at position
// vertex_to_position[v - 1] of `pi`.
struct RealizerCertificate {
  Permutation pi;
  std::vector<int> vertex_to_position;

  // Edge sets agree exactly after relabelling.
  bool verifies(const Graph& g) const;
};

// Exhaustive realizer search. Vertices are inserted one at a time into a
// position order and a value order; given the position slot, adjacency to
// the placed vertices pins the value slot, so each step branches only on
// the position. Every returned certificate has been verified. Throws
// CapacityError above `max_order`.
std::optional<RealizerCertificate> find_realizer(const Graph& g,
                                                 int max_order = kDefaultRealizerMaxOrder);

bool is_permutation_graph(const Graph& g, int max_order = kDefaultRealizerMaxOrder);

// Rewrites pi so that every twin class of its inversion graph (vertices
// named by value) occupies a contiguous run of consecutive values, increasing
// for non-adjacent twins and decreasing for adjacent ones. The realized graph
// keeps its isomorphism class.
Permutation normalize_twins(const Permutation& pi);

// Post-condition of normalize_twins.
bool twins_form_runs(const Permutation& pi);

}  // namespace permgraph
