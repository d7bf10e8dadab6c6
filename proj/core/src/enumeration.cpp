#include "permgraph/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "permgraph/error.hpp"
#include "permgraph/forbidden_catalog.hpp"
#include "permgraph/graph_search.hpp"
#include "permgraph/permutation.hpp"

namespace permgraph {

BigCount count_compositions_23(int x) {
  if (x < 0) return 0;
  std::vector<BigCount> t(static_cast<std::size_t>(x) + 1, 0);
  t[0] = 1;
  for (int i = 1; i <= x; ++i) {
    if (i >= 2) t[i] += t[i - 2];
    if (i >= 3) t[i] += t[i - 3];
  }
  return t[x];
}

BigCount count_cubic(int n) {
  if (n < 1) throw MalformedInput("count_cubic needs n >= 1");
  if (n % 2 == 1) return 0;
  std::vector<BigCount> a(static_cast<std::size_t>(std::max(n, 20)) + 1, 0);
  for (int k : {4, 6, 10, 14, 16, 18, 20}) a[k] = 1;
  for (int k = 22; k <= n; k += 2) {
    a[k] = a[k - 4] + a[k - 6];
    if (k % 4 == 0) a[k] -= count_compositions_23((k - 20) / 4);
  }
  return a[n];
}

std::string CountTable::a_tsv() const {
  std::ostringstream out;
  for (const auto& [n, a] : a_values) out << n << '\t' << a << '\n';
  return out.str();
}

std::string CountTable::t_tsv() const {
  std::ostringstream out;
  for (const auto& [x, t] : t_values) out << x << '\t' << t << '\n';
  return out.str();
}

CountTable count_table(int n_max, int x_max) {
  CountTable table;
  for (int n = 1; n <= n_max; ++n) table.a_values[n] = count_cubic(n);
  for (int x = 0; x <= x_max; ++x) table.t_values[x] = count_compositions_23(x);
  return table;
}

std::vector<BoxcarSequence> generate_sequences(int n) {
  if (n % 2 != 0 || n < 10) {
    throw DomainError("boxcar sequences exist only for even n >= 10, got " + std::to_string(n));
  }
  const int m = (n - 10) / 2;
  std::set<BoxcarSequence> found;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      found.insert(canonicalize_sequence(BoxcarSequence(parts)));
      return;
    }
    for (int p : {2, 3}) {
      if (p > remaining) continue;
      parts.push_back(p);
      extend(remaining - p);
      parts.pop_back();
    }
  };
  extend(m);
  return {found.begin(), found.end()};
}

std::vector<Graph> generate_graphs(int n) {
  if (n < 1 || n % 2 != 0) {
    throw DomainError("3-regular graphs need an even positive order, got " + std::to_string(n));
  }
  if (n == 4) return {complete_graph(4)};
  if (n == 6) return {complete_bipartite_graph(3, 3)};
  if (n < 10) return {};
  std::vector<Graph> out;
  for (const BoxcarSequence& seq : generate_sequences(n)) out.push_back(boxcar_graph(seq));
  return out;
}

namespace {

// Labels follow a breadth-first order from vertex 0: when vertex v is
// processed it takes its missing edges from already discovered later vertices
// and from fresh vertices, which become its children. Connectivity is
// therefore built in and every graph appears under at least one labelling.
class CubicGenerator {
 public:
  explicit CubicGenerator(int n)
      : n_(n), adj_(static_cast<std::size_t>(n), 0), deg_(static_cast<std::size_t>(n), 0) {}

  std::vector<Graph> run() {
    discovered_ = 1;
    process(0);
    return classes_.graphs();
  }

 private:
  void process(int v) {
    if (v == n_) {
      if (discovered_ == n_) emit();
      return;
    }
    if (v >= discovered_) return;
    const int need = 3 - deg_[v];
    std::vector<int> open;
    for (int w = v + 1; w < discovered_; ++w)
      if (deg_[w] < 3 && !(adj_[v] >> w & 1)) open.push_back(w);
    const std::uint32_t subsets = std::uint32_t{1} << open.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      const int chosen = __builtin_popcount(mask);
      if (chosen > need) continue;
      const int fresh = need - chosen;
      if (discovered_ + fresh > n_) continue;
      for (std::size_t i = 0; i < open.size(); ++i)
        if (mask >> i & 1) link(v, open[i]);
      const int first_fresh = discovered_;
      for (int c = 0; c < fresh; ++c) link(v, first_fresh + c);
      discovered_ += fresh;
      process(v + 1);
      discovered_ -= fresh;
      for (int c = 0; c < fresh; ++c) unlink(v, first_fresh + c);
      for (std::size_t i = 0; i < open.size(); ++i)
        if (mask >> i & 1) unlink(v, open[i]);
    }
  }

  void link(int a, int b) {
    adj_[a] |= std::uint32_t{1} << b;
    adj_[b] |= std::uint32_t{1} << a;
    ++deg_[a];
    ++deg_[b];
  }
  void unlink(int a, int b) {
    adj_[a] &= ~(std::uint32_t{1} << b);
    adj_[b] &= ~(std::uint32_t{1} << a);
    --deg_[a];
    --deg_[b];
  }

  void emit() {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * n_ / 2));
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (adj_[a] >> b & 1) edges.push_back({a + 1, b + 1});
    classes_.insert(Graph(n_, edges));
  }

  int n_;
  int discovered_ = 0;
  std::vector<std::uint32_t> adj_;
  std::vector<int> deg_;
  IsomorphismClasses classes_;
};

}  // namespace

std::vector<Graph> census_cubic(int n, int max_order) {
  if (n > max_order || n > 30) {
    throw CapacityError("cubic census is bounded to order " + std::to_string(max_order) +
                        ", got " + std::to_string(n));
  }
  if (n < 1 || n % 2 != 0) {
    throw DomainError("3-regular graphs need an even positive order, got " + std::to_string(n));
  }
  if (n < 4) return {};
  return CubicGenerator(n).run();
}

bool CrosscheckReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CrosscheckEntry& e) { return e.agrees; });
}

std::string CrosscheckReport::to_text() const {
  std::ostringstream out;
  out << "recognizer: " << (recognizer == Recognizer::Realizer ? "realizer" : "catalog") << '\n';
  out << "n\trecurrence\tgenerated\tcensus_total\tcensus_permutation\tverdict\n";
  for (const auto& e : entries) {
    out << e.n << '\t' << e.recurrence << '\t' << e.generated
        << (e.materialized ? "" : "*") << '\t'
        << (e.census_total ? std::to_string(*e.census_total) : "-") << '\t'
        << (e.census_permutation ? std::to_string(*e.census_permutation) : "-") << '\t'
        << (e.agrees ? "ok" : "MISMATCH") << '\n';
  }
  out << "(* counted as sequences, not materialized)\n";
  out << (ok() ? "all counts agree" : "DISCREPANCY FOUND") << '\n';
  return out.str();
}

CrosscheckReport crosscheck(int n_max, Recognizer recognizer, int materialize_max,
                            int census_max) {
  CrosscheckReport report;
  report.recognizer = recognizer;
  for (int n = 2; n <= n_max; n += 2) {
    CrosscheckEntry e;
    e.n = n;
    e.recurrence = count_cubic(n);
    if (n <= materialize_max || n < 10) {
      e.generated = generate_graphs(n).size();
      e.materialized = true;
    } else {
      e.generated = generate_sequences(n).size();
    }
    e.agrees = e.recurrence == e.generated;
    if (n <= census_max) {
      const std::vector<Graph> census = census_cubic(n, census_max);
      int accepted = 0;
      for (const Graph& g : census) {
        const bool yes = recognizer == Recognizer::Realizer
                             ? is_permutation_graph(g, std::max(n, kDefaultRealizerMaxOrder))
                             : is_cubic_permutation_graph_fast(g, builtin_forbidden_catalog());
        if (yes) ++accepted;
      }
      e.census_total = static_cast<int>(census.size());
      e.census_permutation = accepted;
      e.agrees = e.agrees && BigCount(accepted) == e.recurrence;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace permgraph
