#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permgraph/graph.hpp"
#include "permgraph/permutation.hpp"

namespace permgraph {

enum class PartKind { Clique, Independent };

// K_k or I_k. A single vertex is always stored as a clique.
struct BlowupPart {
  PartKind kind = PartKind::Clique;
  int size = 1;

  static BlowupPart clique(int k);
  static BlowupPart independent(int k);

  std::string to_string() const;  // "K2", "I3"
  static BlowupPart parse(std::string_view token);

  friend bool operator==(const BlowupPart&, const BlowupPart&) = default;
};

// G[H1, ..., Hn] with every Hi complete or empty; parts[i] replaces vertex i+1.
struct BlowupSpec {
  Graph base;
  std::vector<BlowupPart> parts;

  int order() const;  // total vertex count of the blow-up
};

Graph part_graph(const BlowupPart& part);

// Decreasing for cliques, increasing for independent sets.
Permutation part_realizer(const BlowupPart& part);

// Composition of arbitrary graphs into `base`. Vertices are numbered block by
// block in base-vertex order. Throws MalformedInput if parts.size() differs
// from the base order or a part is empty.
Graph compose(const Graph& base, std::span<const Graph> parts);

Graph apply_blowup(const BlowupSpec& spec);

// Realizer of compose(graph_from_permutation(sigma), graphs of taus): block i
// holds taus[i] shifted by the total size of the blocks whose sigma value is
// smaller than sigma(i). Using value rank rather than position for the shift
// is what makes block values order like sigma.
Permutation blowup_realizer(const Permutation& sigma, std::span<const Permutation> taus);

// Certificate for apply_blowup(spec), given a certificate for spec.base.
RealizerCertificate realize_blowup(const BlowupSpec& spec, const RealizerCertificate& base);

struct TwinClass {
  VertexSet members;
  PartKind kind = PartKind::Clique;
};

// Maximal twin classes ordered by smallest member.
struct TwinPartition {
  std::vector<TwinClass> classes;
  std::vector<int> class_of;  // class_of[v - 1] is the index of v's class
};

TwinPartition twin_partition(const Graph& g);

// Quotient by the twin partition together with the spec that rebuilds g:
// quotient vertex i is class i, and apply_blowup(spec) is isomorphic to g.
// This is the unique smallest graph of which g is a blow-up.
struct MinimalBase {
  BlowupSpec spec;
  std::vector<int> class_of;

  const Graph& quotient() const noexcept { return spec.base; }
};

MinimalBase minimal_base(const Graph& g);

// Repeats the twin quotient until the graph has no twins. Unlike
// minimal_base, later rounds need not preserve the blow-up relation.
Graph twin_quotient_fixed_point(const Graph& g);

// If g is a blow-up of a path, the spec over path_graph(k) with parts listed
// along the path (walked from its smaller-labelled end of the quotient).
std::optional<BlowupSpec> is_blowup_of_path(const Graph& g);

// "<base graph6> K2 I2 K1 ..." with one token per base vertex.
std::string format_blowup_spec(const BlowupSpec& spec);
BlowupSpec parse_blowup_spec(std::string_view text);

}  // namespace permgraph
