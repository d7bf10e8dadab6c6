#include "permgraph/graph_search.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "permgraph/error.hpp"

namespace permgraph {
namespace {

int triangles_at(const Graph& g, Vertex v) {
  int count = 0;
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.adjacent(nb[i], nb[j])) ++count;
  return count;
}

// Stable colouring shared between g and h so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_jointly(const Graph& g, const Graph& h) {
  std::map<std::vector<int>, int> ids;
  auto initial = [&](const Graph& x) {
    std::vector<int> c(static_cast<std::size_t>(x.order()) + 1, 0);
    for (Vertex v = 1; v <= x.order(); ++v) {
      auto [it, _] = ids.try_emplace({x.degree(v), triangles_at(x, v)},
                                     static_cast<int>(ids.size()));
      c[v] = it->second;
    }
    return c;
  };
  std::vector<int> cg = initial(g);
  std::vector<int> ch = initial(h);
  std::size_t classes = ids.size();
  for (int round = 0; round <= g.order(); ++round) {
    ids.clear();
    auto step = [&](const Graph& x, const std::vector<int>& c) {
      std::vector<int> next(c.size(), 0);
      for (Vertex v = 1; v <= x.order(); ++v) {
        std::vector<int> sig;
        sig.reserve(x.neighbors(v).size() + 1);
        for (Vertex w : x.neighbors(v)) sig.push_back(c[w]);
        std::sort(sig.begin(), sig.end());
        sig.push_back(c[v]);
        auto [it, _] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size()));
        next[v] = it->second;
      }
      return next;
    };
    std::vector<int> ng = step(g, cg);
    std::vector<int> nh = step(h, ch);
    cg = std::move(ng);
    ch = std::move(nh);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cg, ch};
}

// Search order: each vertex after the first prefers the unplaced vertex with
// the most placed neighbours, then the rarer colour, then the smaller label.
std::vector<Vertex> search_order(const Graph& g, const std::vector<int>& colour) {
  const int n = g.order();
  const int max_colour = n == 0 ? 0 : *std::max_element(colour.begin() + 1, colour.end());
  std::vector<int> freq(static_cast<std::size_t>(max_colour) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) ++freq[colour[v]];
  std::vector<int> placed_nb(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> placed(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (placed[v]) continue;
      if (best == 0) {
        best = v;
        continue;
      }
      if (placed_nb[v] != placed_nb[best]) {
        if (placed_nb[v] > placed_nb[best]) best = v;
      } else if (freq[colour[v]] < freq[colour[best]]) {
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nb[w];
  }
  return order;
}

enum class Match { Induced, Subgraph };

// Maps every pattern vertex into `host`. With Match::Induced non-edges must
// map to non-edges as well. `pattern_colour`/`host_colour` restrict
// candidates when non-empty.
std::optional<VertexMap> embed(const Graph& pattern, const Graph& host, Match mode,
                               const std::vector<int>& pattern_colour,
                               const std::vector<int>& host_colour) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return std::nullopt;
  if (k == 0) return VertexMap{};
  const bool coloured = !pattern_colour.empty();
  std::vector<int> uniform(static_cast<std::size_t>(k) + 1, 0);
  const std::vector<Vertex> order = search_order(pattern, coloured ? pattern_colour : uniform);

  std::vector<Vertex> anchor(static_cast<std::size_t>(k), 0);
  std::vector<int> pos(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  for (int i = 0; i < k; ++i) {
    for (Vertex w : pattern.neighbors(order[i])) {
      if (pos[w] < i && (anchor[i] == 0 || pos[w] < pos[anchor[i]])) anchor[i] = w;
    }
  }

  VertexMap map(static_cast<std::size_t>(k) + 1, 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> all_host(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all_host[i] = i + 1;

  auto fits = [&](int i, Vertex c) {
    const Vertex x = order[i];
    if (used[c]) return false;
    if (coloured && host_colour[c] != pattern_colour[x]) return false;
    if (host.degree(c) < pattern.degree(x)) return false;
    for (int j = 0; j < i; ++j) {
      const Vertex y = order[j];
      const bool pe = pattern.adjacent(x, y);
      const bool he = host.adjacent(c, map[y]);
      if (pe && !he) return false;
      if (mode == Match::Induced && !pe && he) return false;
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == k) return true;
    const std::vector<Vertex>& candidates =
        anchor[i] != 0 ? host.neighbors(map[anchor[i]]) : all_host;
    for (Vertex c : candidates) {
      if (!fits(i, c)) continue;
      map[order[i]] = c;
      used[c] = 1;
      if (extend(i + 1)) return true;
      used[c] = 0;
    }
    map[order[i]] = 0;
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return VertexMap(map.begin() + 1, map.end());
}

}  // namespace

std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h, int max_order) {
  if (g.order() > max_order || h.order() > max_order) {
    throw CapacityError("isomorphism search is bounded to order " +
                        std::to_string(max_order) + ", got " +
                        std::to_string(std::max(g.order(), h.order())));
  }
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  auto [cg, ch] = refine_jointly(g, h);
  std::vector<int> hist_g(cg.begin() + 1, cg.end());
  std::vector<int> hist_h(ch.begin() + 1, ch.end());
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return std::nullopt;
  auto map = embed(g, h, Match::Induced, cg, ch);
  if (map && !is_isomorphism(g, h, *map)) {
    throw Error("internal error: isomorphism witness failed verification");
  }
  return map;
}

bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& map) {
  if (g.order() != h.order() || static_cast<int>(map.size()) != g.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(h.order()) + 1, 0);
  for (Vertex v : map) {
    if (v < 1 || v > h.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u - 1], map[v - 1])) return false;
  return true;
}

std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern) {
  auto map = embed(pattern, g, Match::Induced, {}, {});
  if (!map) return std::nullopt;
  VertexSet s(map->begin(), map->end());
  std::sort(s.begin(), s.end());
  return s;
}

std::optional<VertexMap> find_subgraph(const Graph& g, const Graph& pattern) {
  return embed(pattern, g, Match::Subgraph, {}, {});
}

std::optional<VertexSet> has_large_hole(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
  std::optional<VertexSet> found;

  // Extends an induced path whose smallest vertex is path[0].
  std::function<bool()> grow = [&]() -> bool {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(w, s)) {
        if (path.size() + 1 >= 5) {
          VertexSet cycle = path;
          cycle.push_back(w);
          std::sort(cycle.begin(), cycle.end());
          found = std::move(cycle);
          return true;
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = 1;
      if (grow()) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = 1; s <= n; ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    if (grow()) return found;
  }
  return std::nullopt;
}

std::optional<VertexMap> has_ladder_subgraph(const Graph& g, int rungs) {
  if (rungs < 2) throw MalformedInput("ladder search needs at least two rungs");
  return find_subgraph(g, ladder_graph(rungs));
}

std::optional<std::vector<Vertex>> hamiltonian_path_bruteforce(const Graph& g, int max_order) {
  const int n = g.order();
  // The table has 2^n entries; 24 is the hard ceiling regardless of max_order.
  if (n > max_order || n > 24) {
    throw CapacityError("Hamiltonian path search is bounded to order " +
                        std::to_string(std::min(max_order, 24)) + ", got " +
                        std::to_string(n));
  }
  if (n == 0) return std::vector<Vertex>{};
  if (!is_connected(g)) return std::nullopt;

  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v - 1] |= std::uint32_t{1} << (w - 1);

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // reach[mask] = set of vertices that can end a path covering exactly mask.
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    std::uint32_t next = 0;
    while (ends != 0) {
      const int e = __builtin_ctz(ends);
      ends &= ends - 1;
      next |= nbr[e];
    }
    next &= ~mask;
    while (next != 0) {
      const std::uint32_t bit = next & (~next + 1);
      next &= next - 1;
      reach[mask | bit] |= bit;
    }
  }
  if (reach[full] == 0) return std::nullopt;

  std::vector<Vertex> path;
  std::uint32_t mask = full;
  int end = __builtin_ctz(reach[full]);
  while (true) {
    path.push_back(end + 1);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << end);
    if (rest == 0) break;
    const std::uint32_t options = reach[rest] & nbr[end];
    end = __builtin_ctz(options);
    mask = rest;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path) {
  if (static_cast<int>(path.size()) != g.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  return true;
}

std::string invariant_key(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> signatures;
  signatures.reserve(static_cast<std::size_t>(n));
  std::vector<int> dist(static_cast<std::size_t>(n) + 1);
  for (Vertex s = 1; s <= n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> profile;
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (static_cast<std::size_t>(dist[v]) >= profile.size()) profile.push_back(0);
      ++profile[dist[v]];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    std::vector<int> sig{g.degree(s), triangles_at(g, s)};
    std::vector<int> nd;
    for (Vertex w : g.neighbors(s)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    sig.insert(sig.end(), nd.begin(), nd.end());
    sig.push_back(-1);
    sig.insert(sig.end(), profile.begin(), profile.end());
    signatures.push_back(std::move(sig));
  }
  std::sort(signatures.begin(), signatures.end());
  std::ostringstream out;
  out << n << ':' << g.size();
  for (const auto& sig : signatures) {
    out << '|';
    for (int x : sig) out << x << ',';
  }
  return out.str();
}

bool IsomorphismClasses::insert(const Graph& g) {
  auto& bucket = buckets_[invariant_key(g)];
  for (std::size_t idx : bucket) {
    if (are_isomorphic(g, graphs_[idx], std::max(g.order(), kDefaultIsomorphismMaxOrder))) {
      return false;
    }
  }
  bucket.push_back(graphs_.size());
  graphs_.push_back(g);
  return true;
}

bool IsomorphismClasses::contains(const Graph& g) const {
  auto it = buckets_.find(invariant_key(g));
  if (it == buckets_.end()) return false;
  for (std::size_t idx : it->second) {
    if (are_isomorphic(g, graphs_[idx], std::max(g.order(), kDefaultIsomorphismMaxOrder))) {
      return true;
    }
  }
  return false;
}

}  // namespace permgraph
