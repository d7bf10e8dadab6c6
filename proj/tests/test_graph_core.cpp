#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "permgraph/blowup.hpp"
#include "permgraph/boxcar.hpp"
#include "permgraph/error.hpp"
#include "permgraph/graph.hpp"
#include "permgraph/graph_search.hpp"
#include "permgraph/planarity.hpp"

using namespace permgraph;

namespace {

// Independent witness check for a returned isomorphism.
bool maps_edges_exactly(const Graph& g, const Graph& h, const VertexMap& map) {
  if (static_cast<int>(map.size()) != g.order() || g.order() != h.order()) return false;
  std::vector<int> sorted(map.begin(), map.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.order(); ++i)
    if (sorted[i] != i + 1) return false;
  std::vector<Edge> image;
  for (const Edge& e : g.edges()) {
    const int a = map[e.u - 1], b = map[e.v - 1];
    image.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(image.begin(), image.end());
  return image == h.edges();
}

bool is_cycle_set(const Graph& g, const VertexSet& s) {
  return oracle::is_cycle_matrix(oracle::induced(oracle::matrix(g), [&] {
    std::vector<int> zero_based;
    for (Vertex v : s) zero_based.push_back(v - 1);
    return zero_based;
  }()));
}

std::vector<Vertex> bfs_distances(const Graph& g, Vertex s) {
  std::vector<Vertex> dist(g.order() + 1, -1);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex w : g.neighbors(queue[i]))
      if (dist[w] < 0) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
  return dist;
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("build_graph constructs exactly the given edges") {
  const std::vector<Edge> k2{{1, 2}};
  const Graph g = build_graph(2, k2);
  CHECK(g.order() == 2);
  CHECK(g.size() == 1);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));

  std::vector<Edge> all;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) all.push_back({u, v});
  CHECK(build_graph(4, all) == complete_graph(4));

  std::vector<Edge> bip;
  for (int u = 1; u <= 3; ++u)
    for (int v = 4; v <= 6; ++v) bip.push_back({u, v});
  const Graph k33 = build_graph(6, bip);
  CHECK(k33 == complete_bipartite_graph(3, 3));
  CHECK(is_regular(k33, 3));
}

TEST_CASE("build_graph collapses duplicates and rejects bad input") {
  const std::vector<Edge> dup{{1, 2}, {2, 1}, {1, 2}};
  CHECK(build_graph(2, dup).size() == 1);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(build_graph(2, loop), MalformedInput);
  const std::vector<Edge> out_of_range{{1, 3}};
  CHECK_THROWS_AS(build_graph(2, out_of_range), MalformedInput);
  const std::vector<Edge> zero{{0, 1}};
  CHECK_THROWS_AS(build_graph(2, zero), MalformedInput);
  CHECK_THROWS_AS(build_graph(0, {}), MalformedInput);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)) == empty_graph(4));
  const Graph two_edges = complement(cycle_graph(4));
  CHECK(two_edges.size() == 2);
  CHECK(two_edges.adjacent(1, 3));
  CHECK(two_edges.adjacent(2, 4));
  CHECK_FALSE(is_connected(two_edges));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() + g.size() ==
          static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
  }
}

TEST_CASE("induced_subgraph") {
  CHECK(induced_subgraph(complete_graph(4), {1, 2, 3}) == complete_graph(3));
  CHECK(induced_subgraph(cycle_graph(5), {2, 3, 4, 5}) == path_graph(4));
  CHECK(induced_subgraph(cycle_graph(5), {1, 2, 3, 4}) == path_graph(4));

  // Delete a pair of opposite cube vertices.
  const Graph q3 = cube_graph();
  const auto dist = bfs_distances(q3, 1);
  const Vertex opposite = static_cast<Vertex>(std::find(dist.begin(), dist.end(), 3) - dist.begin());
  REQUIRE(opposite >= 1);
  VertexSet rest;
  for (Vertex v = 1; v <= 8; ++v)
    if (v != 1 && v != opposite) rest.push_back(v);
  CHECK(oracle::isomorphic(induced_subgraph(q3, rest), cycle_graph(6)));

  CHECK_THROWS_AS(induced_subgraph(q3, {}), MalformedInput);
  CHECK_THROWS_AS(induced_subgraph(q3, {1, 9}), MalformedInput);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(complete_graph(4)));
  CHECK(is_connected(complete_graph(1)));
  CHECK_FALSE(is_connected(disjoint_union(complete_graph(2), complete_graph(2))));
  const Graph b10 = boxcar_graph(BoxcarSequence{});
  CHECK(is_connected(b10));
  CHECK(oracle::connected(b10));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 10, 0.25, rng);
    CHECK(is_connected(g) == oracle::connected(g));
  }
}

TEST_CASE("is_regular") {
  CHECK(is_regular(complete_graph(4), 3));
  CHECK_FALSE(is_regular(path_graph(3), 2));
  CHECK(is_regular(petersen_graph(), 3));
  CHECK(is_regular(cube_graph(), 3));
}

TEST_CASE("named graphs") {
  CHECK(petersen_graph().size() == 15);
  CHECK(cube_graph().size() == 12);
  const Graph ladder = ladder_graph(4);
  CHECK(ladder.order() == 8);
  CHECK(ladder.size() == 10);
  CHECK(oracle::isomorphic(ladder, ladder_graph_perimeter(4)));
  // The perimeter labelling walks a Hamiltonian path 1..8.
  for (Vertex v = 1; v < 8; ++v) CHECK(ladder_graph_perimeter(4).adjacent(v, v + 1));
}

TEST_CASE("are_isomorphic on named graphs") {
  const auto id = are_isomorphic(complete_graph(4), complete_graph(4));
  REQUIRE(id);
  CHECK(maps_edges_exactly(complete_graph(4), complete_graph(4), *id));

  const std::vector<Graph> parts{empty_graph(1), empty_graph(3), empty_graph(2)};
  const Graph blown = compose(path_graph(3), parts);
  const auto map = are_isomorphic(blown, complete_bipartite_graph(3, 3));
  REQUIRE(map);
  CHECK(maps_edges_exactly(blown, complete_bipartite_graph(3, 3), *map));

  CHECK_FALSE(are_isomorphic(cycle_graph(5), path_graph(5)));
  CHECK_FALSE(are_isomorphic(cube_graph(), ladder_graph(4)));
  CHECK_THROWS_AS(are_isomorphic(complete_graph(10), complete_graph(10), 8), CapacityError);
}

TEST_CASE("are_isomorphic agrees with exhaustive search") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    // A relabelled copy is always isomorphic; a random graph with the same
    // edge count usually is not.
    const auto perm = oracle::random_permutation(n, rng);
    const Graph h = relabel(g, perm);
    const auto m1 = are_isomorphic(g, h);
    REQUIRE(m1);
    CHECK(maps_edges_exactly(g, h, *m1));
    const auto back = are_isomorphic(h, g);
    REQUIRE(back);
    CHECK(maps_edges_exactly(h, g, *back));
    const auto self = are_isomorphic(g, g);
    REQUIRE(self);
    CHECK(maps_edges_exactly(g, g, *self));

    const Graph other = oracle::random_graph(n, 0.5, rng);
    const auto m2 = are_isomorphic(g, other);
    CHECK(m2.has_value() == oracle::isomorphic(g, other));
    if (m2) CHECK(maps_edges_exactly(g, other, *m2));
  }
}

TEST_CASE("are_isomorphic on larger regular graphs") {
  std::mt19937 rng(8);
  for (const BoxcarSequence& seq : {BoxcarSequence({2, 3, 3}), BoxcarSequence({3, 3, 2, 2})}) {
    const Graph g = boxcar_graph(seq);
    const Graph h = relabel(g, oracle::random_permutation(g.order(), rng));
    const auto map = are_isomorphic(g, h);
    REQUIRE(map);
    CHECK(maps_edges_exactly(g, h, *map));
  }
}

TEST_CASE("contains_induced") {
  const auto p4 = contains_induced(cycle_graph(6), path_graph(4));
  REQUIRE(p4);
  CHECK(oracle::isomorphic(induced_subgraph(cycle_graph(6), *p4), path_graph(4)));
  CHECK_FALSE(contains_induced(complete_graph(4), cycle_graph(4)));
  const auto c5 = contains_induced(petersen_graph(), cycle_graph(5));
  REQUIRE(c5);
  CHECK(c5->size() == 5);
  CHECK(oracle::isomorphic(induced_subgraph(petersen_graph(), *c5), cycle_graph(5)));
  CHECK(oracle::contains_induced(petersen_graph(), cycle_graph(5)));
}

TEST_CASE("contains_induced agrees with a full subset scan") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    const Graph h = oracle::random_graph(2 + trial % 4, 0.5, rng);
    const auto found = contains_induced(g, h);
    CHECK(found.has_value() == oracle::contains_induced(g, h));
    if (found) CHECK(oracle::isomorphic(induced_subgraph(g, *found), h));
  }
}

TEST_CASE("has_large_hole") {
  const auto c5 = has_large_hole(cycle_graph(5));
  REQUIRE(c5);
  CHECK(*c5 == VertexSet{1, 2, 3, 4, 5});
  CHECK_FALSE(has_large_hole(cycle_graph(4)));
  CHECK_FALSE(has_large_hole(complete_graph(5)));
  CHECK(has_large_hole(petersen_graph()));
  CHECK(has_large_hole(cube_graph()));
  for (const BoxcarSequence& seq :
       {BoxcarSequence{}, BoxcarSequence({2}), BoxcarSequence({3}), BoxcarSequence({2, 2})}) {
    const Graph g = boxcar_graph(seq);
    CHECK_FALSE(has_large_hole(g));
    if (g.order() <= 16) CHECK_FALSE(oracle::has_large_hole(g));
  }
}

TEST_CASE("has_large_hole agrees with exhaustive chordless-cycle search") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_labelled_graphs(n)) {
      const auto hole = has_large_hole(g);
      REQUIRE(hole.has_value() == oracle::has_large_hole(g));
      if (hole) CHECK(is_cycle_set(g, *hole));
    }
  }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = oracle::random_graph(7 + trial % 2, 0.2 + 0.1 * (trial % 4), rng);
    const auto hole = has_large_hole(g);
    REQUIRE(hole.has_value() == oracle::has_large_hole(g));
    if (hole) CHECK(is_cycle_set(g, *hole));
  }
}

TEST_CASE("has_ladder_subgraph") {
  const auto id = has_ladder_subgraph(ladder_graph(4), 4);
  REQUIRE(id);
  for (Vertex v = 1; v <= 8; ++v) CHECK((*id)[v - 1] == v);

  const auto c4 = has_ladder_subgraph(complete_graph(4), 2);
  REQUIRE(c4);
  const Graph ladder2 = ladder_graph(2);
  for (const Edge& e : ladder2.edges())
    CHECK(complete_graph(4).adjacent((*c4)[e.u - 1], (*c4)[e.v - 1]));

  CHECK_FALSE(has_ladder_subgraph(ladder_graph(3), 4));
  CHECK(has_ladder_subgraph(cube_graph(), 4).has_value());
  CHECK(has_ladder_subgraph(cube_graph(), 3).has_value());
  CHECK_THROWS_AS(has_ladder_subgraph(complete_graph(4), 1), MalformedInput);
}

TEST_CASE("is_planar on named graphs") {
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(complete_bipartite_graph(3, 3)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(petersen_graph()));
  CHECK(is_planar(cube_graph()));
  CHECK(is_planar(ladder_graph(6)));
  CHECK(is_planar(complete_graph(1)));
  CHECK(is_planar(empty_graph(7)));
}

TEST_CASE("is_planar agrees with Boyer-Myrvold") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::all_labelled_graphs(n)) REQUIRE(is_planar(g) == oracle::boost_planar(g));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 5 + trial % 10;
    const double p = 0.15 + 0.05 * (trial % 8);
    const Graph g = oracle::random_graph(n, p, rng);
    const bool planar = is_planar(g);
    REQUIRE(planar == oracle::boost_planar(g));
    if (g.order() >= 3 && g.size() > static_cast<std::size_t>(3 * g.order() - 6)) CHECK_FALSE(planar);
  }
}

TEST_CASE("hamiltonian_path_bruteforce") {
  const auto k4 = hamiltonian_path_bruteforce(complete_graph(4));
  REQUIRE(k4);
  CHECK(is_hamiltonian_path(complete_graph(4), *k4));
  CHECK_FALSE(hamiltonian_path_bruteforce(disjoint_union(complete_graph(2), complete_graph(2))));
  const Graph b10 = boxcar_graph(BoxcarSequence{});
  const auto p = hamiltonian_path_bruteforce(b10);
  REQUIRE(p);
  CHECK(is_hamiltonian_path(b10, *p));
  CHECK_FALSE(hamiltonian_path_bruteforce(complete_bipartite_graph(2, 4)));
  CHECK_THROWS_AS(hamiltonian_path_bruteforce(path_graph(21)), CapacityError);
  CHECK(hamiltonian_path_bruteforce(path_graph(21), 22).has_value());
  CHECK_THROWS_AS(hamiltonian_path_bruteforce(path_graph(30), 30), CapacityError);
}

TEST_CASE("hamiltonian_path_bruteforce agrees with trying every ordering") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 8, 0.3, rng);
    const auto p = hamiltonian_path_bruteforce(g);
    REQUIRE(p.has_value() == oracle::has_hamiltonian_path(g));
    if (p) {
      CHECK(is_hamiltonian_path(g, *p));
      for (std::size_t i = 1; i < p->size(); ++i) CHECK(g.adjacent((*p)[i - 1], (*p)[i]));
    }
  }
}

TEST_CASE("IsomorphismClasses deduplicates") {
  IsomorphismClasses classes;
  std::mt19937 rng(4);
  const Graph g = petersen_graph();
  CHECK(classes.insert(g));
  CHECK_FALSE(classes.insert(relabel(g, oracle::random_permutation(10, rng))));
  CHECK(classes.insert(boxcar_graph(BoxcarSequence{})));
  CHECK(classes.size() == 2);
  CHECK(classes.contains(relabel(g, oracle::random_permutation(10, rng))));
}

}  // TEST_SUITE
