// permgraph: command-line front end for the permgraph library.
//
// Exit status: 0 on success or an affirmative verdict, 1 on a negative
// verdict, 2 on any error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgraph/blowup.hpp"
#include "permgraph/boxcar.hpp"
#include "permgraph/enumeration.hpp"
#include "permgraph/error.hpp"
#include "permgraph/forbidden_catalog.hpp"
#include "permgraph/graph.hpp"
#include "permgraph/graph_io.hpp"
#include "permgraph/permutation.hpp"

using json = nlohmann::ordered_json;
using namespace permgraph;

namespace {

constexpr const char* kSchema = "permgraph/1";

enum class OutFormat { Graph6, EdgeList, Dot, Json };

struct Options {
  std::string format = "graph6";
  bool json = false;
  bool certificate = false;
  int max_n = 0;  // 0: per-command default, possibly from PERMGRAPH_MAX_N
  std::string output;
};

int env_max_n() {
  const char* text = std::getenv("PERMGRAPH_MAX_N");
  if (text == nullptr || *text == '\0') return 0;
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == std::string(text).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw MalformedInput(std::string("PERMGRAPH_MAX_N must be a positive integer, got '") + text +
                       "'");
}

int capacity(const Options& opt, int fallback) {
  if (opt.max_n > 0) return opt.max_n;
  if (const int env = env_max_n(); env > 0) return env;
  return fallback;
}

OutFormat out_format(const Options& opt) {
  if (opt.json || opt.format == "json") return OutFormat::Json;
  if (opt.format == "edgelist") return OutFormat::EdgeList;
  if (opt.format == "dot") return OutFormat::Dot;
  return OutFormat::Graph6;
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open input file '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream fields(line);
    long a = 0, b = 0;
    std::string rest;
    return static_cast<bool>(fields >> a >> b) && !(fields >> rest);
  }
  return false;
}

// A single edge list, or one graph per graph6 line.
std::vector<Graph> read_graphs(const std::string& text) {
  if (looks_like_edge_list(text)) return {decode_edge_list(text)};
  std::vector<Graph> graphs = read_graph6_lines(text);
  if (graphs.empty()) throw MalformedInput("no graph in input");
  return graphs;
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

json graph_json(const Graph& g) {
  return json{{"order", g.order()}, {"size", g.size()}, {"graph6", encode_graph6(g)},
              {"edges", edges_json(g)}};
}

json certificate_json(const RealizerCertificate& cert) {
  return json{{"permutation", cert.pi.values()}, {"vertex_to_position", cert.vertex_to_position}};
}

std::string certificate_text(const RealizerCertificate& cert) {
  std::ostringstream out;
  out << "realizer: " << cert.pi.to_string() << '\n' << "vertex-to-position:";
  for (std::size_t v = 0; v < cert.vertex_to_position.size(); ++v)
    out << ' ' << v + 1 << "->" << cert.vertex_to_position[v];
  out << '\n';
  return out.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw MalformedInput("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(Output& out, json body, const std::string& command) {
  json doc{{"schema", kSchema}, {"command", command}};
  doc.update(body);
  out.stream() << doc.dump(2) << '\n';
}

// Shared by every command whose result is one graph.
int emit_graph(const Options& opt, const std::string& command, const Graph& g,
               const std::optional<RealizerCertificate>& cert, json extra = json::object(),
               const std::string& trailer = "") {
  Output out(opt.output);
  const OutFormat fmt = out_format(opt);
  if (fmt == OutFormat::Json) {
    json body = extra;
    body["graph"] = graph_json(g);
    if (opt.certificate && cert) body["certificate"] = certificate_json(*cert);
    emit_json(out, body, command);
    return 0;
  }
  switch (fmt) {
    case OutFormat::EdgeList: out.stream() << encode_edge_list(g); break;
    case OutFormat::Dot: out.stream() << encode_dot(g); break;
    default: out.stream() << encode_graph6(g) << '\n'; break;
  }
  if (opt.certificate && cert) out.stream() << certificate_text(*cert);
  out.stream() << trailer;
  return 0;
}

// graph6 is one line per graph; other formats are separated by a blank line
void write_graph_list(std::ostream& os, OutFormat fmt, const std::vector<Graph>& graphs) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    switch (fmt) {
      case OutFormat::EdgeList: os << (i ? "\n" : "") << encode_edge_list(graphs[i]); break;
      case OutFormat::Dot: os << (i ? "\n" : "") << encode_dot(graphs[i]); break;
      default: os << encode_graph6(graphs[i]) << '\n'; break;
    }
  }
}

int emit_graph_list(const Options& opt, const std::string& command,
                    const std::vector<Graph>& graphs, json extra = json::object()) {
  Output out(opt.output);
  if (out_format(opt) == OutFormat::Json) {
    json list = json::array();
    for (const Graph& g : graphs) list.push_back(graph_json(g));
    json body = extra;
    body["count"] = graphs.size();
    body["graphs"] = list;
    emit_json(out, body, command);
    return 0;
  }
  write_graph_list(out.stream(), out_format(opt), graphs);
  return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto whole = [&](std::string_view part) {
    int value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw MalformedInput("expected N or A..B, got '" + text + "'");
    }
    return value;
  };
  const std::string_view view(text);
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) {
    const int n = whole(view);
    return {n, n};
  }
  return {whole(view.substr(0, dots)), whole(view.substr(dots + 2))};
}

std::string count_string(const BigCount& c) { return c.str(); }

// ---- subcommands ---------------------------------------------------------

int cmd_check(const Options& opt, const std::string& input) {
  const Graph g = read_graph(read_input(input));
  const int bound = capacity(opt, kDefaultRealizerMaxOrder);
  const auto cert = find_realizer(g, bound);
  Output out(opt.output);
  if (out_format(opt) == OutFormat::Json) {
    json body{{"order", g.order()}, {"permutation_graph", cert.has_value()}};
    if (opt.certificate && cert) body["certificate"] = certificate_json(*cert);
    emit_json(out, body, "check");
  } else {
    out.stream() << "permutation-graph: " << (cert ? "yes" : "no") << '\n';
    if (opt.certificate && cert) out.stream() << certificate_text(*cert);
  }
  return cert ? 0 : 1;
}

int cmd_from_perm(const Options& opt, const std::string& text) {
  const Permutation pi = Permutation::parse(text);
  const Graph g = graph_from_permutation(pi);
  std::vector<int> identity(static_cast<std::size_t>(pi.size()));
  for (int i = 0; i < pi.size(); ++i) identity[i] = i + 1;
  return emit_graph(opt, "from-perm", g, RealizerCertificate{pi, identity},
                    json{{"permutation", pi.values()}});
}

int cmd_boxcar(const Options& opt, const std::string& text, bool hamiltonian) {
  const BoxcarSequence seq = BoxcarSequence::parse(text);
  const Graph g = boxcar_graph(seq);
  json extra{{"sequence", seq.to_string()}};
  std::string trailer;
  if (hamiltonian) {
    const auto path = boxcar_hamiltonian_path(seq);
    extra["hamiltonian_path"] = path;
    trailer = "hamiltonian-path:";
    for (Vertex v : path) trailer += ' ' + std::to_string(v);
    trailer += '\n';
  }
  std::optional<RealizerCertificate> cert;
  if (opt.certificate) cert = boxcar_certificate(seq);
  return emit_graph(opt, "boxcar", g, cert, extra, trailer);
}

int cmd_classify(const Options& opt, const std::string& input) {
  const std::vector<Graph> graphs = read_graphs(read_input(input));
  Output out(opt.output);
  bool all_yes = true;
  json results = json::array();
  for (const Graph& g : graphs) {
    const CubicClassification c = classify_cubic(g);
    const bool yes = !std::holds_alternative<NotPermutationGraph>(c);
    all_yes = all_yes && yes;
    if (out_format(opt) == OutFormat::Json) {
      json r{{"graph6", encode_graph6(g)}, {"permutation_graph", yes}};
      if (std::holds_alternative<IsK4>(c)) r["class"] = "K4";
      if (std::holds_alternative<IsK33>(c)) r["class"] = "K3,3";
      if (const auto* b = std::get_if<Boxcar>(&c)) {
        r["class"] = "boxcar";
        r["sequence"] = b->sequence.to_string();
      }
      if (const auto* n = std::get_if<NotPermutationGraph>(&c)) {
        r["class"] = "not-permutation-graph";
        r["witness"] = n->witness;
      }
      results.push_back(r);
    } else {
      out.stream() << describe(c) << '\n';
    }
  }
  if (out_format(opt) == OutFormat::Json) emit_json(out, json{{"results", results}}, "classify");
  return all_yes ? 0 : 1;
}

int cmd_family(const Options& opt, int r, int n) {
  const Graph g = regular_family(r, n);
  return emit_graph(opt, "family", g, regular_family_certificate(r, n), json{{"r", r}, {"n", n}});
}

int cmd_enumerate(const Options& opt, const std::string& count_range,
                  const std::string& t_range, int list_n) {
  Output out(opt.output);
  const bool as_json = out_format(opt) == OutFormat::Json;
  if (list_n > 0) {
    const int bound = capacity(opt, 60);
    if (list_n > bound) {
      throw CapacityError("enumerate --list is bounded to n <= " + std::to_string(bound) +
                          " (raise with --max-n)");
    }
    const std::vector<Graph> graphs = generate_graphs(list_n);
    if (as_json) {
      json list = json::array();
      std::vector<BoxcarSequence> seqs;
      if (list_n >= 10) seqs = generate_sequences(list_n);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        json item = graph_json(graphs[i]);
        if (list_n >= 10) item["sequence"] = seqs[i].to_string();
        list.push_back(item);
      }
      emit_json(out, json{{"n", list_n}, {"count", graphs.size()}, {"graphs", list}},
                "enumerate");
    } else {
      write_graph_list(out.stream(), out_format(opt), graphs);
    }
    return 0;
  }
  if (!t_range.empty()) {
    const auto [lo, hi] = parse_range(t_range);
    if (lo < 0 || hi < lo) throw MalformedInput("bad range '" + t_range + "'");
    json rows = json::array();
    for (int x = lo; x <= hi; ++x) {
      const BigCount t = count_compositions_23(x);
      if (as_json) rows.push_back({{"x", x}, {"t", count_string(t)}});
      else out.stream() << x << '\t' << t << '\n';
    }
    if (as_json) emit_json(out, json{{"compositions", rows}}, "enumerate");
    return 0;
  }
  const auto [lo, hi] = parse_range(count_range.empty() ? "1..40" : count_range);
  if (lo < 1 || hi < lo) throw MalformedInput("bad range '" + count_range + "'");
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    const BigCount a = count_cubic(n);
    if (as_json) rows.push_back({{"n", n}, {"a", count_string(a)}});
    else out.stream() << n << '\t' << a << '\n';
  }
  if (as_json) emit_json(out, json{{"counts", rows}}, "enumerate");
  return 0;
}

int cmd_census(const Options& opt, int n, const std::string& filter) {
  const int bound = capacity(opt, kDefaultCensusMaxOrder);
  std::vector<Graph> graphs = census_cubic(n, bound);
  const std::size_t total = graphs.size();
  if (filter == "permutation") {
    std::erase_if(graphs, [&](const Graph& g) { return !is_permutation_graph(g, std::max(n, 1)); });
  }
  return emit_graph_list(opt, "census", graphs,
                         json{{"n", n}, {"filter", filter}, {"total", total}});
}

int cmd_catalog(const Options& opt, std::optional<int> max_order) {
  const ForbiddenCatalog catalog =
      max_order ? derive_forbidden_catalog(*max_order) : builtin_forbidden_catalog();
  Output out(opt.output);
  if (out_format(opt) == OutFormat::Json) {
    json list = json::array();
    for (const Graph& g : catalog.graphs) list.push_back(graph_json(g));
    emit_json(out,
              json{{"max_order_searched", catalog.max_order_searched},
                   {"count", catalog.graphs.size()},
                   {"graphs", list}},
              "catalog");
  } else {
    out.stream() << write_catalog(catalog);
  }
  return 0;
}

int cmd_blowup(const Options& opt, const std::string& input) {
  const BlowupSpec spec = parse_blowup_spec(read_input(input));
  const Graph g = apply_blowup(spec);
  std::optional<RealizerCertificate> cert;
  if (opt.certificate) {
    if (auto base = find_realizer(spec.base, capacity(opt, kDefaultRealizerMaxOrder)))
      cert = realize_blowup(spec, *base);
  }
  const int status = emit_graph(opt, "blowup", g, cert, json{{"spec", format_blowup_spec(spec)}});
  // Asking for a certificate of a non-permutation base is a negative verdict.
  return opt.certificate && !cert ? 1 : status;
}

int cmd_crosscheck(const Options& opt, int n_max, const std::string& recognizer,
                   int materialize_max) {
  const Recognizer which = recognizer == "catalog" ? Recognizer::Catalog : Recognizer::Realizer;
  const int census_max = capacity(opt, kDefaultCensusMaxOrder);
  const CrosscheckReport report = crosscheck(n_max, which, materialize_max, census_max);
  Output out(opt.output);
  if (out_format(opt) == OutFormat::Json) {
    json rows = json::array();
    for (const auto& e : report.entries) {
      json row{{"n", e.n},
               {"recurrence", count_string(e.recurrence)},
               {"generated", count_string(e.generated)},
               {"materialized", e.materialized}};
      row["census_total"] = e.census_total ? json(*e.census_total) : json(nullptr);
      row["census_permutation"] =
          e.census_permutation ? json(*e.census_permutation) : json(nullptr);
      row["agrees"] = e.agrees;
      rows.push_back(row);
    }
    emit_json(out, json{{"recognizer", recognizer}, {"ok", report.ok()}, {"entries", rows}},
              "crosscheck");
  } else {
    out.stream() << report.to_text();
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permgraph: permutation graphs, boxcar graphs and their enumeration"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Graph output format")
      ->check(CLI::IsMember({"graph6", "edgelist", "dot", "json"}));
  app.add_flag("--json", opt.json, "Emit JSON (same as --format json)");
  app.add_flag("--certificate", opt.certificate, "Print realizer certificates");
  app.add_option("--max-n", opt.max_n, "Capacity bound for exhaustive searches")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", opt.output, "Write output to this file");

  std::string input;
  auto* check = app.add_subcommand("check", "Decide whether a graph is a permutation graph");
  check->add_option("input", input, "Graph file (graph6 or edge list); stdin if omitted");

  std::string perm_text;
  auto* from_perm = app.add_subcommand("from-perm", "Inversion graph of a permutation");
  from_perm->add_option("permutation", perm_text, "e.g. [3,5,1,7,2,8,4,6]")->required();

  std::string seq_text;
  bool hamiltonian = false;
  auto* boxcar = app.add_subcommand("boxcar", "Build the boxcar graph of a 2/3 sequence");
  boxcar->add_option("sequence", seq_text, "e.g. 2,3,2 or - for the empty sequence")->required();
  boxcar->add_flag("--hamiltonian", hamiltonian, "Also print a Hamiltonian path");

  auto* classify = app.add_subcommand("classify", "Classify connected 3-regular graphs");
  classify->add_option("input", input, "Graph file; stdin if omitted");

  int r = 0, family_n = 0;
  auto* family = app.add_subcommand("family", "The r-regular permutation graph G_n");
  family->add_option("r", r)->required();
  family->add_option("n", family_n)->required();

  std::string count_range, t_range;
  int list_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Counts and lists of 3-regular permutation graphs");
  auto* count_opt = enumerate->add_option("--count", count_range, "Table a(n) over N or A..B");
  auto* t_opt = enumerate->add_option("--compositions", t_range, "Table t(x) over N or A..B");
  auto* list_opt = enumerate->add_option("--list", list_n, "List the graphs on n vertices");
  count_opt->excludes(t_opt)->excludes(list_opt);
  t_opt->excludes(list_opt);

  int census_n = 0;
  std::string filter = "all";
  auto* census = app.add_subcommand("census", "All connected cubic graphs on n vertices");
  census->add_option("n", census_n)->required();
  census->add_option("--filter", filter)->check(CLI::IsMember({"all", "permutation"}));

  std::optional<int> catalog_order;
  auto* catalog = app.add_subcommand(
      "catalog", "Forbidden induced subgraphs with maximum degree 3 (builtin unless an order is given)");
  catalog->add_option("max_order", catalog_order, "Derive by brute force up to this order");

  auto* blowup = app.add_subcommand("blowup", "Apply a blow-up spec (\"<graph6> K2 I2 ...\")");
  blowup->add_option("input", input, "Spec file; stdin if omitted");

  int cross_n = 20, materialize_max = 40;
  std::string recognizer = "realizer";
  auto* cross = app.add_subcommand("crosscheck", "Recurrence vs generation vs census");
  cross->add_option("n_max", cross_n)->required();
  cross->add_option("--recognizer", recognizer)->check(CLI::IsMember({"realizer", "catalog"}));
  cross->add_option("--materialize-max", materialize_max, "Build graphs up to this order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(opt, input);
    if (*from_perm) return cmd_from_perm(opt, perm_text);
    if (*boxcar) return cmd_boxcar(opt, seq_text, hamiltonian);
    if (*classify) return cmd_classify(opt, input);
    if (*family) return cmd_family(opt, r, family_n);
    if (*enumerate) return cmd_enumerate(opt, count_range, t_range, list_n);
    if (*census) return cmd_census(opt, census_n, filter);
    if (*catalog) return cmd_catalog(opt, catalog_order);
    if (*blowup) return cmd_blowup(opt, input);
    if (*cross) return cmd_crosscheck(opt, cross_n, recognizer, materialize_max);
  } catch (const std::exception& e) {
    std::cerr << "permgraph: error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
