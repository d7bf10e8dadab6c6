#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permgraph/blowup.hpp"
#include "permgraph/graph.hpp"
#include "permgraph/permutation.hpp"

namespace permgraph {

enum class GadgetId { G1, G2, G3, G4 };

// One building block of a boxcar graph. Consecutive gadgets are glued by
// identifying the right terminal of one with the left terminal of the next.
//   G1 = P3[K2, I2, K1]          right terminal only
//   G2 = P4[K1, K1, K2, K1]      both
//   G3 = P5[K1, K1, I2, I2, K1]  both
//   G4 = P4[K1, K1, I2, K2]      left terminal only
struct Gadget {
  BlowupSpec spec;
  Graph graph;
  std::optional<Vertex> left;
  std::optional<Vertex> right;
  std::vector<Vertex> hamiltonian_path;  // from left terminal (or start) to right terminal
};

Gadget gadget_graph(GadgetId id);

// Ordered list of 2s and 3s: 2 stands for a G2 segment, 3 for a G3 segment.
class BoxcarSequence {
 public:
  BoxcarSequence() = default;
  // Throws MalformedInput on any part other than 2 or 3.
  explicit BoxcarSequence(std::vector<int> parts);

  // "2,3,2"; the empty sequence is "-".
  static BoxcarSequence parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  int total() const noexcept;
  int graph_order() const noexcept { return 10 + 2 * total(); }
  BoxcarSequence reversed() const;
  std::string to_string() const;

  friend bool operator==(const BoxcarSequence&, const BoxcarSequence&) = default;
  friend auto operator<=>(const BoxcarSequence&, const BoxcarSequence&) = default;

 private:
  std::vector<int> parts_;
};

// G1, one gadget per part, then G4, glued at terminals.
Graph boxcar_graph(const BoxcarSequence& seq);

// The same graph as a blow-up of a path:
// [K2,I2,K1] + (2 -> [K1,K2,K1] | 3 -> [K1,I2,I2,K1])* + [K1,I2,K2].
BlowupSpec boxcar_blowup_spec(const BoxcarSequence& seq);

// Certificate for path_graph(k), from the zig-zag 2,4,1,6,3,8,5,...
RealizerCertificate path_realizer(int k);

// Certificate for boxcar_graph(seq), carried over from the path blow-up.
RealizerCertificate boxcar_certificate(const BoxcarSequence& seq);

// A permutation whose inversion graph is isomorphic to boxcar_graph(seq).
Permutation boxcar_realizer(const BoxcarSequence& seq);

// Lexicographic minimum of the sequence and its reverse.
BoxcarSequence canonicalize_sequence(const BoxcarSequence& seq);

struct IsK4 {};
struct IsK33 {};
struct Boxcar {
  BoxcarSequence sequence;  // canonical
};
struct NotPermutationGraph {
  std::string witness;
};

using CubicClassification = std::variant<IsK4, IsK33, Boxcar, NotPermutationGraph>;

// Classifies a connected 3-regular graph. Throws DomainError otherwise.
CubicClassification classify_cubic(const Graph& g);

// "K4", "K3,3", "boxcar 2,3" or "not-permutation-graph: <witness>".
std::string describe(const CubicClassification& c);

// Connected r-regular permutation graph of order 2nr + r + 1: a blow-up of
// P_{4n+2} with ends K2 and K_{r-1} and interior parts cycling through
// I_{r-1}, I_{r-2}, I_1, I_2. Throws DomainError for r < 3 or n < 0.
BlowupSpec regular_family_spec(int r, int n);
Graph regular_family(int r, int n);
RealizerCertificate regular_family_certificate(int r, int n);

// Hamiltonian path of boxcar_graph(seq) stitched from the gadget paths.
std::vector<Vertex> boxcar_hamiltonian_path(const BoxcarSequence& seq);

}  // namespace permgraph
