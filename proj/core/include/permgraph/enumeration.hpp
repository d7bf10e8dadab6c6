#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permgraph/boxcar.hpp"
#include "permgraph/graph.hpp"

namespace permgraph {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr int kDefaultCensusMaxOrder = 12;

// t(x): compositions of x into parts 2 and 3. t(0) = 1, t(x) = 0 for x < 0.
BigCount count_compositions_23(int x);

// a(n): connected 3-regular permutation graphs on n vertices, by the
// recurrence a(n) = a(n-4) + a(n-6) [- t((n-20)/4) when 4 | n] for even
// n > 20, over the base values for n <= 20. Throws MalformedInput for n < 1.
BigCount count_cubic(int n);

struct CountTable {
  std::map<int, BigCount> a_values;  // every n in 1..n_max
  std::map<int, BigCount> t_values;  // every x in 0..x_max

  std::string a_tsv() const;  // "n\ta(n)" lines
  std::string t_tsv() const;  // "x\tt(x)" lines
};

CountTable count_table(int n_max, int x_max);

// Canonical boxcar sequences with total (n - 10) / 2, sorted, one per
// reversal class. Throws DomainError unless n is even and >= 10.
std::vector<BoxcarSequence> generate_sequences(int n);

// Connected 3-regular permutation graphs on n vertices, one per isomorphism
// class: K4, K3,3, or boxcar graphs. Throws DomainError for odd n or n < 1.
std::vector<Graph> generate_graphs(int n);

// Every connected 3-regular graph on n vertices up to isomorphism, by
// breadth-first-labelled generation with isomorphism rejection. Throws
// CapacityError above max_order and DomainError for odd n.
std::vector<Graph> census_cubic(int n, int max_order = kDefaultCensusMaxOrder);

enum class Recognizer { Realizer, Catalog };

struct CrosscheckEntry {
  int n = 0;
  BigCount recurrence;
  BigCount generated;
  bool materialized = false;  // generated count came from building graphs
  std::optional<int> census_total;
  std::optional<int> census_permutation;
  bool agrees = true;
};

struct CrosscheckReport {
  Recognizer recognizer = Recognizer::Realizer;
  std::vector<CrosscheckEntry> entries;  // every even n in 2..n_max

  bool ok() const;
  std::string to_text() const;
};

// Compares the recurrence with generation for all even n <= n_max (graphs
// are materialized up to materialize_max, sequences are counted above), and
// with the exhaustive census for n <= min(n_max, census_max).
CrosscheckReport crosscheck(int n_max, Recognizer recognizer = Recognizer::Realizer,
                            int materialize_max = 40, int census_max = kDefaultCensusMaxOrder);

}  // namespace permgraph
