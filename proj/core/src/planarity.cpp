#include "permgraph/planarity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace permgraph {
namespace {

using LocalEdge = std::pair<int, int>;

// Edge sets of the biconnected blocks (Hopcroft-Tarjan with an edge stack).
std::vector<std::vector<LocalEdge>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<LocalEdge> stack;
  std::vector<std::vector<LocalEdge>> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = ++timer;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] == 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<LocalEdge> block;
          while (true) {
            LocalEdge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == LocalEdge{v, w}) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (Vertex v = 1; v <= n; ++v)
    if (disc[v] == 0) dfs(v, 0);
  return blocks;
}

// A fragment of the not-yet-embedded part relative to the embedded subgraph:
// either a single chord or a component of unembedded vertices with its
// attachment edges.
struct Fragment {
  std::vector<int> attachments;  // sorted embedded contact vertices
  std::vector<int> inner;        // unembedded vertices (empty for a chord)
};

bool face_contains(const std::vector<int>& face, const std::vector<int>& attachments) {
  for (int a : attachments)
    if (std::find(face.begin(), face.end(), a) == face.end()) return false;
  return true;
}

// Block given as vertices 0..k-1 and an edge list; the block is 2-connected
// or a single edge.
bool block_is_planar(int k, const std::vector<LocalEdge>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m <= 3 || k <= 4) return true;
  if (m > 3 * k - 6) return false;
  if (m == k) return true;  // a 2-connected block with m == k is a cycle

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  std::vector<char> vertex_in(static_cast<std::size_t>(k), 0);
  std::set<LocalEdge> edge_in;
  auto key = [](int u, int v) { return u < v ? LocalEdge{u, v} : LocalEdge{v, u}; };

  // Initial cycle: edge (a,b) closed by a shortest a-b path avoiding it.
  const int a = edges.front().first;
  const int b = edges.front().second;
  std::vector<int> prev(static_cast<std::size_t>(k), -1);
  std::deque<int> queue{a};
  prev[a] = a;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (prev[w] != -1 || (v == a && w == b)) continue;
      prev[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<int> cycle;
  for (int v = b; v != a; v = prev[v]) cycle.push_back(v);
  cycle.push_back(a);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    vertex_in[cycle[i]] = 1;
    edge_in.insert(key(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  std::vector<std::vector<int>> faces{cycle, cycle};

  while (static_cast<int>(edge_in.size()) < m) {
    std::vector<Fragment> fragments;
    for (auto [u, v] : edges) {
      if (vertex_in[u] && vertex_in[v] && !edge_in.count(key(u, v))) {
        fragments.push_back({{std::min(u, v), std::max(u, v)}, {}});
      }
    }
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int s = 0; s < k; ++s) {
      if (vertex_in[s] || seen[s]) continue;
      Fragment f;
      std::set<int> contacts;
      std::deque<int> q{s};
      seen[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        f.inner.push_back(v);
        for (int w : adj[v]) {
          if (vertex_in[w]) {
            contacts.insert(w);
          } else if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
        }
      }
      f.attachments.assign(contacts.begin(), contacts.end());
      fragments.push_back(std::move(f));
    }

    std::size_t chosen = 0;
    std::size_t chosen_face = 0;
    std::size_t fewest = faces.size() + 1;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      std::size_t count = 0;
      std::size_t first = 0;
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        if (face_contains(faces[fi], fragments[i].attachments)) {
          if (count == 0) first = fi;
          ++count;
        }
      }
      if (count == 0) return false;
      if (count < fewest) {
        fewest = count;
        chosen = i;
        chosen_face = first;
      }
    }

    // A path through the chosen fragment between two distinct attachments.
    const Fragment& frag = fragments[chosen];
    std::vector<int> path;
    if (frag.inner.empty()) {
      path = frag.attachments;
    } else {
      std::vector<char> inside(static_cast<std::size_t>(k), 0);
      for (int v : frag.inner) inside[v] = 1;
      const int start = frag.attachments.front();
      int entry = -1;
      for (int w : adj[start]) {
        if (inside[w]) {
          entry = w;
          break;
        }
      }
      std::vector<int> from(static_cast<std::size_t>(k), -1);
      std::deque<int> q{entry};
      from[entry] = entry;
      int exit_vertex = -1;
      int target = -1;
      while (!q.empty() && target < 0) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v]) {
          if (vertex_in[w] && w != start) {
            exit_vertex = v;
            target = w;
            break;
          }
        }
        if (target >= 0) break;
        for (int w : adj[v]) {
          if (inside[w] && from[w] < 0) {
            from[w] = v;
            q.push_back(w);
          }
        }
      }
      std::vector<int> middle;
      for (int v = exit_vertex;; v = from[v]) {
        middle.push_back(v);
        if (v == entry) break;
      }
      std::reverse(middle.begin(), middle.end());
      path.push_back(start);
      path.insert(path.end(), middle.begin(), middle.end());
      path.push_back(target);
    }

    for (std::size_t i = 0; i < path.size(); ++i) {
      vertex_in[path[i]] = 1;
      if (i + 1 < path.size()) edge_in.insert(key(path[i], path[i + 1]));
    }

    // Split the face along the path.
    const std::vector<int> face = faces[chosen_face];
    const int from_v = path.front();
    const int to_v = path.back();
    const std::size_t len = face.size();
    const std::size_t i = static_cast<std::size_t>(
        std::find(face.begin(), face.end(), from_v) - face.begin());
    const std::size_t j = static_cast<std::size_t>(
        std::find(face.begin(), face.end(), to_v) - face.begin());
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    std::vector<int> left;
    for (std::size_t p = i;; p = (p + 1) % len) {
      left.push_back(face[p]);
      if (p == j) break;
    }
    left.insert(left.end(), interior.rbegin(), interior.rend());
    std::vector<int> right;
    for (std::size_t p = j;; p = (p + 1) % len) {
      right.push_back(face[p]);
      if (p == i) break;
    }
    right.insert(right.end(), interior.begin(), interior.end());
    faces[chosen_face] = std::move(left);
    faces.push_back(std::move(right));
  }
  return true;
}

}  // namespace

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (static_cast<long long>(g.size()) > 3LL * n - 6) return false;
  for (const auto& block : biconnected_blocks(g)) {
    std::vector<int> ids(static_cast<std::size_t>(n) + 1, -1);
    int k = 0;
    std::vector<LocalEdge> local;
    local.reserve(block.size());
    for (auto [u, v] : block) {
      if (ids[u] < 0) ids[u] = k++;
      if (ids[v] < 0) ids[v] = k++;
      local.emplace_back(ids[u], ids[v]);
    }
    if (!block_is_planar(k, local)) return false;
  }
  return true;
}

}  // namespace permgraph
