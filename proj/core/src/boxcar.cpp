#include "permgraph/boxcar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "permgraph/error.hpp"
#include "permgraph/forbidden_catalog.hpp"
#include "permgraph/graph_io.hpp"
#include "permgraph/graph_search.hpp"

namespace permgraph {
namespace {

using P = BlowupPart;

Gadget make_gadget(std::vector<BlowupPart> parts, std::optional<Vertex> left,
                   std::optional<Vertex> right, std::vector<Vertex> path) {
  Gadget g;
  g.spec = BlowupSpec{path_graph(static_cast<int>(parts.size())), std::move(parts)};
  g.graph = apply_blowup(g.spec);
  g.left = left;
  g.right = right;
  g.hamiltonian_path = std::move(path);
  return g;
}

struct Assembly {
  Graph graph;
  std::vector<Vertex> hamiltonian_path;
};

Assembly assemble(const BoxcarSequence& seq) {
  std::vector<GadgetId> ids{GadgetId::G1};
  for (int p : seq.parts()) ids.push_back(p == 2 ? GadgetId::G2 : GadgetId::G3);
  ids.push_back(GadgetId::G4);

  std::vector<Edge> edges;
  std::vector<Vertex> path;
  int next_label = 0;
  Vertex joint = 0;  // global label of the previous right terminal
  for (GadgetId id : ids) {
    const Gadget gadget = gadget_graph(id);
    std::vector<Vertex> global(static_cast<std::size_t>(gadget.graph.order()) + 1, 0);
    for (Vertex v = 1; v <= gadget.graph.order(); ++v) {
      global[v] = (gadget.left && v == *gadget.left) ? joint : ++next_label;
    }
    for (const Edge& e : gadget.graph.edges()) edges.push_back({global[e.u], global[e.v]});
    for (std::size_t i = 0; i < gadget.hamiltonian_path.size(); ++i) {
      if (i == 0 && gadget.left) continue;  // already the end of the path so far
      path.push_back(global[gadget.hamiltonian_path[i]]);
    }
    if (gadget.right) joint = global[*gadget.right];
  }
  return {Graph(next_label, edges), std::move(path)};
}

// Reads a twin-quotient part list as G1, G2/G3 segments and G4.
std::optional<BoxcarSequence> read_parts(const std::vector<BlowupPart>& parts) {
  const P k1 = P::clique(1), k2 = P::clique(2), i2 = P::independent(2);
  auto matches = [&](std::size_t at, std::initializer_list<BlowupPart> want) {
    if (at + want.size() > parts.size()) return false;
    return std::equal(want.begin(), want.end(), parts.begin() + static_cast<long>(at));
  };
  if (!matches(0, {k2, i2, k1})) return std::nullopt;
  std::size_t at = 3;
  std::vector<int> seq;
  while (true) {
    if (at + 3 == parts.size() && matches(at, {k1, i2, k2})) return BoxcarSequence(seq);
    if (matches(at, {k1, k2, k1})) {
      seq.push_back(2);
      at += 3;
    } else if (matches(at, {k1, i2, i2, k1})) {
      seq.push_back(3);
      at += 4;
    } else {
      return std::nullopt;
    }
  }
}

std::string set_to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

}  // namespace

Gadget gadget_graph(GadgetId id) {
  const P k1 = P::clique(1), k2 = P::clique(2), i2 = P::independent(2);
  switch (id) {
    case GadgetId::G1:
      return make_gadget({k2, i2, k1}, std::nullopt, 5, {1, 3, 2, 4, 5});
    case GadgetId::G2:
      return make_gadget({k1, k1, k2, k1}, 1, 5, {1, 2, 3, 4, 5});
    case GadgetId::G3:
      return make_gadget({k1, k1, i2, i2, k1}, 1, 7, {1, 2, 3, 5, 4, 6, 7});
    case GadgetId::G4:
      return make_gadget({k1, k1, i2, k2}, 1, std::nullopt, {1, 2, 3, 5, 6, 4});
  }
  throw MalformedInput("unknown gadget");
}

BoxcarSequence::BoxcarSequence(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p != 2 && p != 3) {
      throw MalformedInput("boxcar sequence parts must be 2 or 3, got " + std::to_string(p));
    }
  }
}

BoxcarSequence BoxcarSequence::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "-") return BoxcarSequence();
  if (text.empty()) throw ParseError("empty boxcar sequence (write \"-\")", 0);
  std::vector<int> parts;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool expect_digit = (i % 2 == 0);
    if (expect_digit) {
      if (c != '2' && c != '3') throw ParseError("boxcar part must be 2 or 3", i);
      parts.push_back(c - '0');
    } else if (c != ',') {
      throw ParseError("expected ',' between boxcar parts", i);
    }
  }
  if (text.size() % 2 == 0) throw ParseError("boxcar sequence ends with ','", text.size() - 1);
  return BoxcarSequence(std::move(parts));
}

int BoxcarSequence::total() const noexcept {
  int t = 0;
  for (int p : parts_) t += p;
  return t;
}

BoxcarSequence BoxcarSequence::reversed() const {
  return BoxcarSequence(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string BoxcarSequence::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Graph boxcar_graph(const BoxcarSequence& seq) { return assemble(seq).graph; }

BlowupSpec boxcar_blowup_spec(const BoxcarSequence& seq) {
  const P k1 = P::clique(1), k2 = P::clique(2), i2 = P::independent(2);
  std::vector<BlowupPart> parts{k2, i2, k1};
  for (int p : seq.parts()) {
    if (p == 2) {
      parts.insert(parts.end(), {k1, k2, k1});
    } else {
      parts.insert(parts.end(), {k1, i2, i2, k1});
    }
  }
  parts.insert(parts.end(), {k1, i2, k2});
  const int k = static_cast<int>(parts.size());
  return BlowupSpec{path_graph(k), std::move(parts)};
}

RealizerCertificate path_realizer(int k) {
  if (k < 1) throw MalformedInput("path order must be positive");
  std::vector<int> raw(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) raw[i - 1] = (i == 1) ? 2 : (i % 2 == 0 ? i + 2 : i - 2);
  if (k % 2 == 0) raw[k - 1] = k - 1;
  if (k == 1) raw[0] = 1;
  // Standardize to 1..k (keeps every inversion).
  std::vector<int> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> values;
  for (int x : raw) {
    values.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                                      sorted.begin()) + 1);
  }
  Permutation pi(std::move(values));
  const Graph positions = graph_from_permutation(pi);

  std::vector<int> vertex_to_position;
  Vertex start = 1;
  for (Vertex v = 1; v <= k; ++v) {
    if (positions.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  Vertex prev = 0;
  for (Vertex v = start; v != 0;) {
    vertex_to_position.push_back(v);
    Vertex next = 0;
    for (Vertex w : positions.neighbors(v))
      if (w != prev) next = w;
    prev = v;
    v = next;
  }
  RealizerCertificate cert{std::move(pi), std::move(vertex_to_position)};
  if (!cert.verifies(path_graph(k))) {
    throw Error("internal error: zig-zag path realizer failed for order " + std::to_string(k));
  }
  return cert;
}

RealizerCertificate boxcar_certificate(const BoxcarSequence& seq) {
  const BlowupSpec spec = boxcar_blowup_spec(seq);
  const RealizerCertificate blown = realize_blowup(spec, path_realizer(spec.base.order()));
  const Graph g = boxcar_graph(seq);
  const auto map = are_isomorphic(g, apply_blowup(spec), g.order());
  if (!map) throw std::logic_error("boxcar assembly and path blow-up differ");
  std::vector<int> positions(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v)
    positions[v - 1] = blown.vertex_to_position[(*map)[v - 1] - 1];
  RealizerCertificate cert{blown.pi, std::move(positions)};
  if (!cert.verifies(g)) throw std::logic_error("boxcar certificate failed to verify");
  return cert;
}

Permutation boxcar_realizer(const BoxcarSequence& seq) { return boxcar_certificate(seq).pi; }

BoxcarSequence canonicalize_sequence(const BoxcarSequence& seq) {
  return std::min(seq, seq.reversed());
}

CubicClassification classify_cubic(const Graph& g) {
  if (!is_regular(g, 3) || !is_connected(g)) {
    throw DomainError("classify_cubic needs a connected 3-regular graph");
  }
  if (g.order() == 4) return IsK4{};
  if (g.order() == 6 && are_isomorphic(g, complete_bipartite_graph(3, 3))) return IsK33{};

  if (auto spec = is_blowup_of_path(g)) {
    std::optional<BoxcarSequence> seq = read_parts(spec->parts);
    if (!seq) {
      std::vector<BlowupPart> rev(spec->parts.rbegin(), spec->parts.rend());
      seq = read_parts(rev);
    }
    if (seq && are_isomorphic(boxcar_graph(*seq), g, std::max(g.order(), 64))) {
      return Boxcar{canonicalize_sequence(*seq)};
    }
  }

  if (auto hole = has_large_hole(g)) {
    return NotPermutationGraph{"large hole: induced cycle of length " + std::to_string(hole->size()) +
                               " on " + set_to_string(*hole)};
  }
  for (const Graph& f : builtin_forbidden_catalog().graphs) {
    if (auto s = contains_induced(g, f)) {
      return NotPermutationGraph{"induced forbidden subgraph " + encode_graph6(f) + " on " +
                                 set_to_string(*s)};
    }
  }
  const int k = minimal_base(g).quotient().order();
  return NotPermutationGraph{"twin quotient (order " + std::to_string(k) +
                             ") is not a path, so the graph is not a boxcar"};
}

std::string describe(const CubicClassification& c) {
  struct Visitor {
    std::string operator()(const IsK4&) const { return "K4"; }
    std::string operator()(const IsK33&) const { return "K3,3"; }
    std::string operator()(const Boxcar& b) const { return "boxcar " + b.sequence.to_string(); }
    std::string operator()(const NotPermutationGraph& n) const {
      return "not-permutation-graph: " + n.witness;
    }
  };
  return std::visit(Visitor{}, c);
}

BlowupSpec regular_family_spec(int r, int n) {
  if (r < 3) throw DomainError("regular family needs r >= 3, got " + std::to_string(r));
  if (n < 0) throw DomainError("regular family needs n >= 0, got " + std::to_string(n));
  const int m = 4 * n + 2;
  std::vector<BlowupPart> parts;
  parts.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    if (i == 1) {
      parts.push_back(P::clique(2));
    } else if (i == m) {
      parts.push_back(P::clique(r - 1));
    } else {
      switch (i % 4) {
        case 2: parts.push_back(P::independent(r - 1)); break;
        case 3: parts.push_back(P::independent(r - 2)); break;
        case 0: parts.push_back(P::independent(1)); break;
        default: parts.push_back(P::independent(2)); break;
      }
    }
  }
  return BlowupSpec{path_graph(m), std::move(parts)};
}

Graph regular_family(int r, int n) { return apply_blowup(regular_family_spec(r, n)); }

RealizerCertificate regular_family_certificate(int r, int n) {
  const BlowupSpec spec = regular_family_spec(r, n);
  return realize_blowup(spec, path_realizer(spec.base.order()));
}

std::vector<Vertex> boxcar_hamiltonian_path(const BoxcarSequence& seq) {
  Assembly a = assemble(seq);
  if (!is_hamiltonian_path(a.graph, a.hamiltonian_path)) {
    throw Error("internal error: stitched boxcar path is not Hamiltonian");
  }
  return std::move(a.hamiltonian_path);
}

}  // namespace permgraph
