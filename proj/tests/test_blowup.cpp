#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "permgraph/blowup.hpp"
#include "permgraph/boxcar.hpp"
#include "permgraph/error.hpp"
#include "permgraph/graph_io.hpp"
#include "permgraph/graph_search.hpp"
#include "permgraph/permutation.hpp"

using namespace permgraph;

namespace {

const Permutation kLadderPerm = Permutation::parse("[5,4,7,2,1,10,3,12,11,6,9,8]");

std::vector<BlowupPart> parse_parts(std::initializer_list<const char*> tokens) {
  std::vector<BlowupPart> out;
  for (const char* t : tokens) out.push_back(BlowupPart::parse(t));
  return out;
}

bool isomorphic_checked(const Graph& g, const Graph& h) {
  const auto map = are_isomorphic(g, h);
  return map && is_isomorphism(g, h, *map);
}

BlowupPart random_part(std::mt19937& rng, int max_size) {
  std::uniform_int_distribution<int> size(1, max_size);
  std::bernoulli_distribution clique(0.5);
  const int k = size(rng);
  return clique(rng) ? BlowupPart::clique(k) : BlowupPart::independent(k);
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("BlowupPart") {
  CHECK(BlowupPart::independent(1) == BlowupPart::clique(1));
  CHECK(BlowupPart::independent(1).to_string() == "K1");
  CHECK(BlowupPart::parse("I3") == BlowupPart::independent(3));
  CHECK(BlowupPart::parse("K2").to_string() == "K2");
  CHECK(BlowupPart::parse("I1") == BlowupPart::clique(1));
  CHECK_THROWS_AS(BlowupPart::parse("K0"), MalformedInput);
  CHECK_THROWS_AS(BlowupPart::parse("X2"), MalformedInput);
  CHECK_THROWS_AS(BlowupPart::parse("K"), MalformedInput);
  CHECK(part_graph(BlowupPart::clique(3)) == complete_graph(3));
  CHECK(part_graph(BlowupPart::independent(3)) == empty_graph(3));
  CHECK(graph_from_permutation(part_realizer(BlowupPart::clique(4))) == complete_graph(4));
  CHECK(graph_from_permutation(part_realizer(BlowupPart::independent(4))) == empty_graph(4));
}

TEST_CASE("compose") {
  const std::vector<Graph> k2k2{complete_graph(2), complete_graph(2)};
  CHECK(compose(path_graph(2), k2k2) == complete_graph(4));

  const std::vector<Graph> i1i3i2{empty_graph(1), empty_graph(3), empty_graph(2)};
  CHECK(oracle::isomorphic(compose(path_graph(3), i1i3i2), complete_bipartite_graph(3, 3)));

  const Graph p = petersen_graph();
  const std::vector<Graph> singles(10, complete_graph(1));
  CHECK(compose(p, singles) == p);

  const std::vector<Graph> short_list{complete_graph(1)};
  CHECK_THROWS_AS(compose(path_graph(2), short_list), MalformedInput);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph base = oracle::random_graph(1 + trial % 6, 0.5, rng);
    std::vector<Graph> parts;
    for (int i = 0; i < base.order(); ++i) parts.push_back(oracle::random_graph(1 + (trial + i) % 3, 0.5, rng));
    REQUIRE(compose(base, parts) == oracle::compose(base, parts));
  }
}

TEST_CASE("apply_blowup") {
  CHECK(apply_blowup({path_graph(2), parse_parts({"K2", "K2"})}) == complete_graph(4));

  const BlowupSpec lad_spec{ladder_graph_perimeter(4),
                             parse_parts({"K2", "K1", "K1", "K2", "K2", "K1", "K1", "K2"})};
  const Graph lad_blown = apply_blowup(lad_spec);
  CHECK(is_regular(lad_blown, 4));
  CHECK(isomorphic_checked(lad_blown, graph_from_permutation(kLadderPerm)));

  // C4 with its two I2 parts on adjacent vertices.
  const Graph k33 = apply_blowup({cycle_graph(4), parse_parts({"I2", "I2", "K1", "K1"})});
  CHECK(is_regular(k33, 3));
  CHECK(oracle::isomorphic(k33, complete_bipartite_graph(3, 3)));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph base = oracle::random_graph(1 + trial % 5, 0.5, rng);
    BlowupSpec spec{base, {}};
    std::vector<Graph> parts;
    for (int i = 0; i < base.order(); ++i) {
      spec.parts.push_back(random_part(rng, 3));
      parts.push_back(part_graph(spec.parts.back()));
    }
    CHECK(apply_blowup(spec) == oracle::compose(base, parts));
    CHECK(spec.order() == apply_blowup(spec).order());
  }
}

TEST_CASE("blowup_realizer") {
  const std::vector<Permutation> k2k2{Permutation::parse("[2,1]"), Permutation::parse("[2,1]")};
  const Permutation k4 = blowup_realizer(Permutation::parse("[2,1]"), k2k2);
  CHECK(k4.values() == std::vector<int>{4, 3, 2, 1});
  CHECK(graph_from_permutation(k4) == complete_graph(4));

  const Permutation tau = Permutation::parse("[3,1,4,2]");
  const std::vector<Permutation> single{tau};
  CHECK(blowup_realizer(Permutation::identity(1), single) == tau);

  CHECK_THROWS_AS(blowup_realizer(Permutation::parse("[2,1]"), single), MalformedInput);
}

TEST_CASE("blowup_realizer realizes the composition") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> base_size(1, 5);
    const int k = base_size(rng);
    const Permutation sigma(oracle::random_permutation(k, rng));
    std::vector<Permutation> taus;
    std::vector<Graph> parts;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> part_size(1, std::max(1, std::min(4, 14 - total - (k - i - 1))));
      const int s = part_size(rng);
      total += s;
      taus.emplace_back(oracle::random_permutation(s, rng));
      parts.push_back(graph_from_permutation(taus.back()));
    }
    const Graph realized = graph_from_permutation(blowup_realizer(sigma, taus));
    const Graph composed = oracle::compose(graph_from_permutation(sigma), parts);
    REQUIRE(isomorphic_checked(realized, composed));
  }
}

TEST_CASE("realize_blowup certifies apply_blowup exactly") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation sigma(oracle::random_permutation(1 + trial % 7, rng));
    BlowupSpec spec{graph_from_permutation(sigma), {}};
    for (int i = 0; i < sigma.size(); ++i) spec.parts.push_back(random_part(rng, 3));
    const RealizerCertificate base{sigma, [&] {
                                     std::vector<int> id(sigma.size());
                                     for (int i = 0; i < sigma.size(); ++i) id[i] = i + 1;
                                     return id;
                                   }()};
    const RealizerCertificate cert = realize_blowup(spec, base);
    CHECK(cert.verifies(apply_blowup(spec)));
  }
}

TEST_CASE("twin_partition") {
  const TwinPartition k4 = twin_partition(complete_graph(4));
  REQUIRE(k4.classes.size() == 1);
  CHECK(k4.classes[0].members == VertexSet{1, 2, 3, 4});
  CHECK(k4.classes[0].kind == PartKind::Clique);

  const TwinPartition c4 = twin_partition(cycle_graph(4));
  REQUIRE(c4.classes.size() == 2);
  CHECK(c4.classes[0].members == VertexSet{1, 3});
  CHECK(c4.classes[1].members == VertexSet{2, 4});
  CHECK(c4.classes[0].kind == PartKind::Independent);

  const TwinPartition lad = twin_partition(graph_from_permutation(kLadderPerm));
  CHECK(lad.classes.size() == 8);
  CHECK(std::count_if(lad.classes.begin(), lad.classes.end(),
                      [](const TwinClass& c) { return c.members.size() == 2; }) == 4);
  CHECK(std::count_if(lad.classes.begin(), lad.classes.end(),
                      [](const TwinClass& c) { return c.members.size() == 1; }) == 4);
}

TEST_CASE("twin classes are cliques or independent sets of pairwise twins") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    // Blow-ups have plenty of twins.
    const Graph base = oracle::random_graph(1 + trial % 5, 0.5, rng);
    BlowupSpec spec{base, {}};
    for (int i = 0; i < base.order(); ++i) spec.parts.push_back(random_part(rng, 3));
    const Graph g = apply_blowup(spec);
    const TwinPartition tp = twin_partition(g);
    std::vector<int> covered(g.order() + 1, 0);
    for (const TwinClass& c : tp.classes) {
      for (Vertex u : c.members) {
        ++covered[u];
        for (Vertex v : c.members) {
          if (u >= v) continue;
          for (Vertex w = 1; w <= g.order(); ++w)
            if (w != u && w != v) REQUIRE(g.adjacent(u, w) == g.adjacent(v, w));
          if (c.members.size() > 1)
            CHECK(g.adjacent(u, v) == (c.kind == PartKind::Clique));
        }
      }
    }
    for (Vertex v = 1; v <= g.order(); ++v) CHECK(covered[v] == 1);
    // Maximality: vertices of different classes are never twins.
    for (Vertex u = 1; u <= g.order(); ++u)
      for (Vertex v = u + 1; v <= g.order(); ++v)
        if (tp.class_of[u - 1] != tp.class_of[v - 1]) CHECK_FALSE(are_twins(g, u, v));
  }
}

TEST_CASE("minimal_base") {
  const MinimalBase k4 = minimal_base(complete_graph(4));
  CHECK(k4.quotient() == complete_graph(1));
  CHECK(k4.spec.parts == std::vector<BlowupPart>{BlowupPart::clique(4)});

  const MinimalBase lad = minimal_base(graph_from_permutation(kLadderPerm));
  CHECK(isomorphic_checked(lad.quotient(), ladder_graph(4)));
  CHECK(isomorphic_checked(apply_blowup(lad.spec), graph_from_permutation(kLadderPerm)));

  // The quotient of diamond[K2, I2, K2, K1] is the diamond: the two degree-2
  // diamond vertices are twins in the diamond but their blocks are not twins
  // in the blow-up, so a second quotient round would no longer describe it.
  const Graph diamond(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  const Graph g = apply_blowup({diamond, parse_parts({"K2", "I2", "K2", "K1"})});
  const MinimalBase mb = minimal_base(g);
  CHECK(mb.quotient().order() == 4);
  CHECK(oracle::isomorphic(mb.quotient(), diamond));
  CHECK(twin_quotient_fixed_point(g).order() == 1);
  CHECK_FALSE(is_blowup_of_path(g));

  std::mt19937 rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph base = oracle::random_graph(1 + trial % 6, 0.5, rng);
    BlowupSpec spec{base, {}};
    for (int i = 0; i < base.order(); ++i) spec.parts.push_back(random_part(rng, 3));
    const Graph h = apply_blowup(spec);
    const MinimalBase m = minimal_base(h);
    CHECK(m.quotient().order() == static_cast<int>(twin_partition(h).classes.size()));
    CHECK(m.quotient().order() <= base.order());
    REQUIRE(isomorphic_checked(apply_blowup(m.spec), h));
    // The quotient of a twin-free quotient is itself.
    const Graph fp = twin_quotient_fixed_point(h);
    CHECK(isomorphic_checked(minimal_base(fp).quotient(), fp));
  }
}

TEST_CASE("minimal bases have no twins of maximum degree") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation sigma(oracle::random_permutation(2 + trial % 6, rng));
    BlowupSpec spec{graph_from_permutation(sigma), {}};
    for (int i = 0; i < sigma.size(); ++i) spec.parts.push_back(random_part(rng, 3));
    const Graph g = apply_blowup(spec);
    const int d = g.max_degree();
    const Graph q = minimal_base(g).quotient();
    for (Vertex u = 1; u <= q.order(); ++u)
      for (Vertex v = u + 1; v <= q.order(); ++v)
        if (q.degree(u) == d && q.degree(v) == d) CHECK_FALSE(are_twins(q, u, v));
  }
}

TEST_CASE("is_blowup_of_path") {
  for (const char* text : {"-", "2", "3", "2,2", "2,3", "3,3", "2,2,2"}) {
    const BoxcarSequence seq = BoxcarSequence::parse(text);
    const Graph g = boxcar_graph(seq);
    if (g.order() > 20) continue;
    const auto spec = is_blowup_of_path(g);
    REQUIRE(spec);
    CHECK(is_path_graph(spec->base));
    CHECK(isomorphic_checked(apply_blowup(*spec), g));
  }
  CHECK_FALSE(is_blowup_of_path(graph_from_permutation(kLadderPerm)));

  const auto k33 = is_blowup_of_path(complete_bipartite_graph(3, 3));
  REQUIRE(k33);
  CHECK(k33->base == path_graph(2));
  CHECK(k33->parts == std::vector<BlowupPart>{BlowupPart::independent(3), BlowupPart::independent(3)});

  const auto k4 = is_blowup_of_path(complete_graph(4));
  REQUIRE(k4);
  CHECK(k4->base == path_graph(1));
  CHECK_FALSE(is_blowup_of_path(cycle_graph(5)));
}

TEST_CASE("blow-up spec text format") {
  const BlowupSpec spec{path_graph(3), parse_parts({"K2", "I2", "K1"})};
  const std::string text = format_blowup_spec(spec);
  CHECK(text == encode_graph6(path_graph(3)) + " K2 I2 K1");
  const BlowupSpec back = parse_blowup_spec(text);
  CHECK(back.base == spec.base);
  CHECK(back.parts == spec.parts);
  CHECK_THROWS_AS(parse_blowup_spec(encode_graph6(path_graph(3)) + " K2 I2"), MalformedInput);
  CHECK_THROWS_AS(parse_blowup_spec(""), MalformedInput);
}

}  // TEST_SUITE
