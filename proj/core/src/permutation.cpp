#include "permgraph/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

#include "permgraph/error.hpp"

namespace permgraph {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw MalformedInput("a permutation needs at least one entry");
  std::vector<char> seen(values_.size() + 1, 0);
  const int n = static_cast<int>(values_.size());
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw MalformedInput("permutation entry " + std::to_string(v) + " outside 1.." +
                           std::to_string(n));
    }
    if (seen[v]) throw MalformedInput("permutation entry " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[i] = i + 1;
  return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  const bool bracketed = pos < text.size() && text[pos] == '[';
  if (bracketed) ++pos;
  std::vector<int> values;
  while (true) {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw ParseError("expected a permutation entry", pos);
    }
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (bracketed) {
    if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
    ++pos;
  }
  skip_space();
  if (pos != text.size()) throw ParseError("unexpected trailing characters", pos);
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values_.size(); ++i) out << (i ? "," : "") << values_[i];
  out << ']';
  return out.str();
}

std::vector<std::pair<int, int>> inversions(const Permutation& pi) {
  std::vector<std::pair<int, int>> out;
  const auto& v = pi.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) out.emplace_back(v[i], v[j]);
  return out;
}

Graph graph_from_permutation(const Permutation& pi) {
  std::vector<Edge> edges;
  const auto& v = pi.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) edges.push_back({static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)});
  return Graph(pi.size(), edges);
}

Permutation reverse_permutation(const Permutation& pi) {
  std::vector<int> values(pi.values().rbegin(), pi.values().rend());
  return Permutation(std::move(values));
}

bool RealizerCertificate::verifies(const Graph& g) const {
  const int n = g.order();
  if (pi.size() != n || static_cast<int>(vertex_to_position.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int p : vertex_to_position) {
    if (p < 1 || p > n || seen[p]) return false;
    seen[p] = 1;
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const int pu = vertex_to_position[u - 1];
      const int pv = vertex_to_position[v - 1];
      const bool inverted = (pu < pv) != (pi.at(pu) < pi.at(pv));
      if (inverted != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

namespace {

// Placement order: most already-placed neighbours first, then higher degree,
// then smaller label.
std::vector<Vertex> realizer_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> placed_nb(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> placed(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (placed[v]) continue;
      if (best == 0 || placed_nb[v] > placed_nb[best] ||
          (placed_nb[v] == placed_nb[best] && g.degree(v) > g.degree(best))) {
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nb[w];
  }
  return order;
}

}  // namespace

std::optional<RealizerCertificate> find_realizer(const Graph& g, int max_order) {
  const int n = g.order();
  if (n > max_order) {
    throw CapacityError("realizer search is bounded to order " + std::to_string(max_order) +
                        ", got " + std::to_string(n));
  }
  if (n == 0) return std::nullopt;
  const std::vector<Vertex> order = realizer_order(g);

  // Placed vertices listed left-to-right by position and bottom-to-top by value.
  std::vector<Vertex> by_position;
  std::vector<Vertex> by_value;
  std::vector<int> value_rank(static_cast<std::size_t>(n) + 1, -1);
  by_position.reserve(static_cast<std::size_t>(n));
  by_value.reserve(static_cast<std::size_t>(n));

  auto rerank = [&] {
    for (std::size_t r = 0; r < by_value.size(); ++r) value_rank[by_value[r]] = static_cast<int>(r);
  };

  std::function<bool(int)> place = [&](int step) -> bool {
    if (step == n) return true;
    const Vertex w = order[step];
    const int k = static_cast<int>(by_position.size());
    // Reversing both orders maps realizers to realizers, so the second vertex
    // may be pinned to the right of the first.
    const int first_slot = (step == 1) ? 1 : 0;
    for (int slot = first_slot; slot <= k; ++slot) {
      int max_below = -1;
      int min_above = k;
      for (int i = 0; i < k; ++i) {
        const Vertex u = by_position[i];
        const bool left = i < slot;
        const bool adj = g.adjacent(u, w);
        // Left and adjacent, or right and non-adjacent: u's value exceeds w's.
        if (left == adj) {
          min_above = std::min(min_above, value_rank[u]);
        } else {
          max_below = std::max(max_below, value_rank[u]);
        }
        if (max_below >= min_above) break;
      }
      if (max_below >= min_above) continue;
      const int value_slot = max_below + 1;
      by_position.insert(by_position.begin() + slot, w);
      by_value.insert(by_value.begin() + value_slot, w);
      rerank();
      if (place(step + 1)) return true;
      by_position.erase(by_position.begin() + slot);
      by_value.erase(by_value.begin() + value_slot);
      value_rank[w] = -1;
      rerank();
    }
    return false;
  };

  if (!place(0)) return std::nullopt;

  std::vector<int> vertex_to_position(static_cast<std::size_t>(n));
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) vertex_to_position[by_position[p] - 1] = p + 1;
  for (int r = 0; r < n; ++r) values[vertex_to_position[by_value[r] - 1] - 1] = r + 1;
  RealizerCertificate cert{Permutation(std::move(values)), std::move(vertex_to_position)};
  if (!cert.verifies(g)) throw Error("internal error: realizer certificate failed verification");
  return cert;
}

bool is_permutation_graph(const Graph& g, int max_order) {
  return find_realizer(g, max_order).has_value();
}

namespace {

struct ValueView {
  std::vector<int> values;    // one-line notation
  std::vector<int> position;  // position[value] (1-based)
  Graph graph;                // vertex = value

  explicit ValueView(std::vector<int> v) : values(std::move(v)) {
    const int n = static_cast<int>(values.size());
    position.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) position[values[i]] = i + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (values[i] > values[j]) edges.push_back({values[i], values[j]});
    graph = Graph(n, edges);
  }

  // Twin classes on values, ordered by smallest member.
  std::vector<std::vector<int>> twin_classes() const {
    const int n = graph.order();
    std::vector<int> cls(static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= n; ++a) {
      if (cls[a] >= 0) continue;
      cls[a] = static_cast<int>(out.size());
      out.push_back({a});
      for (int b = a + 1; b <= n; ++b) {
        if (cls[b] < 0 && are_twins(graph, a, b)) {
          cls[b] = cls[a];
          out.back().push_back(b);
        }
      }
    }
    return out;
  }

  // Largest r such that c, c+1, ..., r are members laid out as a proper run.
  int run_end(const std::vector<int>& cls) const {
    const int c = cls.front();
    const bool adjacent_class = cls.size() > 1 && graph.adjacent(cls[0], cls[1]);
    const int step = adjacent_class ? -1 : 1;
    int r = c;
    while (std::find(cls.begin(), cls.end(), r + 1) != cls.end() &&
           position[r + 1] == position[r] + step) {
      ++r;
    }
    return r;
  }
};

}  // namespace

bool twins_form_runs(const Permutation& pi) {
  ValueView view(pi.values());
  for (const auto& cls : view.twin_classes()) {
    if (view.run_end(cls) != cls.back()) return false;
  }
  return true;
}

Permutation normalize_twins(const Permutation& pi) {
  std::vector<int> values = pi.values();
  const int n = pi.size();
  // Each pass lengthens one run by one entry, so n * n passes is generous.
  for (int pass = 0; pass <= n * n; ++pass) {
    ValueView view(values);
    const auto classes = view.twin_classes();
    const std::vector<int>* target = nullptr;
    int u = 0;
    for (const auto& cls : classes) {
      const int r = view.run_end(cls);
      if (r != cls.back()) {
        target = &cls;
        u = r;
        break;
      }
    }
    if (target == nullptr) return Permutation(std::move(values));

    const auto& cls = *target;
    const int v = *std::upper_bound(cls.begin(), cls.end(), u);
    const bool adjacent_twins = view.graph.adjacent(u, v);

    // Drop v, lift the values strictly between u and v, and put u + 1 right
    // beside u (after it for non-adjacent twins, before it for adjacent ones).
    std::vector<int> next;
    next.reserve(values.size());
    for (int x : values) {
      if (x == v) continue;
      const int lifted = (x > u && x < v) ? x + 1 : x;
      if (x == u && adjacent_twins) next.push_back(u + 1);
      next.push_back(lifted);
      if (x == u && !adjacent_twins) next.push_back(u + 1);
    }
    values = std::move(next);
  }
  throw Error("internal error: twin normalization did not converge");
}

}  // namespace permgraph
