#include "permgraph/blowup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "permgraph/error.hpp"
#include "permgraph/graph_io.hpp"

namespace permgraph {

BlowupPart BlowupPart::clique(int k) {
  if (k < 1) throw MalformedInput("blow-up part size must be positive");
  return {PartKind::Clique, k};
}

BlowupPart BlowupPart::independent(int k) {
  if (k < 1) throw MalformedInput("blow-up part size must be positive");
  return {k == 1 ? PartKind::Clique : PartKind::Independent, k};
}

std::string BlowupPart::to_string() const {
  return (kind == PartKind::Clique ? "K" : "I") + std::to_string(size);
}

BlowupPart BlowupPart::parse(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'K' && token[0] != 'I')) {
    throw ParseError("blow-up part must look like K<k> or I<k>", 0);
  }
  int k = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), k);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("blow-up part size is not an integer", 1);
  }
  if (k < 1) throw ParseError("blow-up part size must be positive", 1);
  return token[0] == 'K' ? clique(k) : independent(k);
}

int BlowupSpec::order() const {
  int total = 0;
  for (const BlowupPart& p : parts) total += p.size;
  return total;
}

Graph part_graph(const BlowupPart& part) {
  return part.kind == PartKind::Clique ? complete_graph(part.size) : empty_graph(part.size);
}

Permutation part_realizer(const BlowupPart& part) {
  std::vector<int> values(static_cast<std::size_t>(part.size));
  for (int i = 0; i < part.size; ++i) {
    values[i] = part.kind == PartKind::Clique ? part.size - i : i + 1;
  }
  return Permutation(std::move(values));
}

Graph compose(const Graph& base, std::span<const Graph> parts) {
  if (static_cast<int>(parts.size()) != base.order()) {
    throw MalformedInput("composition needs one part per base vertex: " +
                         std::to_string(parts.size()) + " parts for order " +
                         std::to_string(base.order()));
  }
  std::vector<int> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].order() < 1) throw MalformedInput("composition part is empty");
    start[i + 1] = start[i] + parts[i].order();
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Edge& e : parts[i].edges()) edges.push_back({start[i] + e.u, start[i] + e.v});
  }
  for (const Edge& e : base.edges()) {
    for (int a = start[e.u - 1] + 1; a <= start[e.u]; ++a)
      for (int b = start[e.v - 1] + 1; b <= start[e.v]; ++b) edges.push_back({a, b});
  }
  return Graph(start.back(), edges);
}

Graph apply_blowup(const BlowupSpec& spec) {
  std::vector<Graph> parts;
  parts.reserve(spec.parts.size());
  for (const BlowupPart& p : spec.parts) parts.push_back(part_graph(p));
  return compose(spec.base, parts);
}

Permutation blowup_realizer(const Permutation& sigma, std::span<const Permutation> taus) {
  if (static_cast<int>(taus.size()) != sigma.size()) {
    throw MalformedInput("blow-up realizer needs one permutation per entry of sigma");
  }
  const int n = sigma.size();
  // offset_by_value[v] = total size of blocks whose sigma value is below v.
  std::vector<int> size_by_value(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) size_by_value[sigma.at(i)] = taus[i - 1].size();
  std::vector<int> offset_by_value(static_cast<std::size_t>(n) + 2, 0);
  for (int v = 1; v <= n; ++v) offset_by_value[v + 1] = offset_by_value[v] + size_by_value[v];

  std::vector<int> values;
  for (int i = 1; i <= n; ++i) {
    const int shift = offset_by_value[sigma.at(i)];
    for (int x : taus[i - 1].values()) values.push_back(x + shift);
  }
  return Permutation(std::move(values));
}

RealizerCertificate realize_blowup(const BlowupSpec& spec, const RealizerCertificate& base) {
  const int k = spec.base.order();
  if (static_cast<int>(spec.parts.size()) != k || base.pi.size() != k) {
    throw MalformedInput("blow-up spec and base certificate disagree on the base order");
  }
  std::vector<Vertex> at_position(static_cast<std::size_t>(k) + 1, 0);
  for (Vertex b = 1; b <= k; ++b) at_position[base.vertex_to_position[b - 1]] = b;

  std::vector<Permutation> taus;
  taus.reserve(static_cast<std::size_t>(k));
  std::vector<int> block_start(static_cast<std::size_t>(k) + 1, 0);  // by base vertex
  int running = 0;
  for (int p = 1; p <= k; ++p) {
    const Vertex b = at_position[p];
    taus.push_back(part_realizer(spec.parts[b - 1]));
    block_start[b] = running;
    running += spec.parts[b - 1].size;
  }
  Permutation pi = blowup_realizer(base.pi, taus);

  std::vector<int> vertex_to_position;
  vertex_to_position.reserve(static_cast<std::size_t>(running));
  for (Vertex b = 1; b <= k; ++b)
    for (int t = 1; t <= spec.parts[b - 1].size; ++t)
      vertex_to_position.push_back(block_start[b] + t);
  return {std::move(pi), std::move(vertex_to_position)};
}

TwinPartition twin_partition(const Graph& g) {
  const int n = g.order();
  TwinPartition out;
  out.class_of.assign(static_cast<std::size_t>(n), -1);
  for (Vertex a = 1; a <= n; ++a) {
    if (out.class_of[a - 1] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    TwinClass cls{{a}, PartKind::Clique};
    out.class_of[a - 1] = id;
    for (Vertex b = a + 1; b <= n; ++b) {
      if (out.class_of[b - 1] < 0 && are_twins(g, a, b)) {
        out.class_of[b - 1] = id;
        cls.members.push_back(b);
      }
    }
    if (cls.members.size() > 1 && !g.adjacent(cls.members[0], cls.members[1])) {
      cls.kind = PartKind::Independent;
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

MinimalBase minimal_base(const Graph& g) {
  TwinPartition tp = twin_partition(g);
  const int k = static_cast<int>(tp.classes.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(tp.classes[i].members.front(), tp.classes[j].members.front()))
        edges.push_back({i + 1, j + 1});
  MinimalBase out;
  out.spec.base = Graph(k, edges);
  for (const TwinClass& c : tp.classes) {
    const int size = static_cast<int>(c.members.size());
    out.spec.parts.push_back(c.kind == PartKind::Clique ? BlowupPart::clique(size)
                                                        : BlowupPart::independent(size));
  }
  out.class_of = std::move(tp.class_of);
  return out;
}

Graph twin_quotient_fixed_point(const Graph& g) {
  Graph current = g;
  while (true) {
    Graph next = minimal_base(current).spec.base;
    if (next.order() == current.order()) return current;
    current = std::move(next);
  }
}

std::optional<BlowupSpec> is_blowup_of_path(const Graph& g) {
  MinimalBase mb = minimal_base(g);
  const Graph& q = mb.quotient();
  if (!is_path_graph(q)) return std::nullopt;
  const int k = q.order();
  std::vector<Vertex> walk;
  if (k == 1) {
    walk.push_back(1);
  } else {
    Vertex start = 0;
    for (Vertex v = 1; v <= k && start == 0; ++v)
      if (q.degree(v) == 1) start = v;
    Vertex prev = 0;
    for (Vertex v = start; v != 0;) {
      walk.push_back(v);
      Vertex next = 0;
      for (Vertex w : q.neighbors(v))
        if (w != prev) next = w;
      prev = v;
      v = next;
    }
  }
  BlowupSpec spec{path_graph(k), {}};
  for (Vertex v : walk) spec.parts.push_back(mb.spec.parts[v - 1]);
  return spec;
}

std::string format_blowup_spec(const BlowupSpec& spec) {
  std::string out = encode_graph6(spec.base);
  for (const BlowupPart& p : spec.parts) out += " " + p.to_string();
  return out;
}

BlowupSpec parse_blowup_spec(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t begin = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > begin) tokens.emplace_back(text.substr(begin, pos - begin), begin);
  }
  if (tokens.empty()) throw ParseError("empty blow-up spec", 0);
  BlowupSpec spec;
  try {
    spec.base = decode_graph6(tokens[0].first);
  } catch (const ParseError& e) {
    throw ParseError("blow-up base: " + e.reason(), tokens[0].second + e.offset());
  }
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    try {
      spec.parts.push_back(BlowupPart::parse(tokens[i].first));
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), tokens[i].second + e.offset());
    }
  }
  if (static_cast<int>(spec.parts.size()) != spec.base.order()) {
    throw ParseError("blow-up spec lists " + std::to_string(spec.parts.size()) +
                         " parts for a base of order " + std::to_string(spec.base.order()),
                     text.size());
  }
  return spec;
}

}  // namespace permgraph
