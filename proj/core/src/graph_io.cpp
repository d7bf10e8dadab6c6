#include "permgraph/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "permgraph/error.hpp"

namespace permgraph {
namespace {

constexpr int kGraph6Offset = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Offset));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Offset));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 string ends early", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kGraph6Offset || c > kGraph6Offset + 63) {
    throw ParseError("graph6 byte out of range", pos);
  }
  return c - kGraph6Offset;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_size(out, n);
  int bits = 0;
  int filled = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + kGraph6Offset));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + kGraph6Offset));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(0, end);

  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
  long long n = 0;
  if (text[pos] != '~') {
    n = sextet(text, pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | sextet(text, pos++);
  } else {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(text, pos++);
  }
  if (n > 10000) throw ParseError("graph6 order too large for this library", pos);

  const long long pairs = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos < body) throw ParseError("graph6 string ends early", text.size());
  if (text.size() - pos > body) throw ParseError("trailing bytes after graph6 body", pos + body);

  std::vector<Edge> edges;
  long long bit = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i, ++bit) {
      const int byte = sextet(text, pos + static_cast<std::size_t>(bit / 6));
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = pos + static_cast<std::size_t>(bit / 6);
    const int byte = sextet(text, last);
    if ((byte & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw ParseError("non-zero padding bits in graph6 string", last);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph decode_edge_list(std::string_view text) {
  std::vector<long long> numbers;
  std::vector<std::size_t> offsets;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw ParseError("expected an integer in edge list", pos);
    }
    offsets.push_back(pos);
    numbers.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (numbers.size() < 2) throw ParseError("edge list needs an \"n m\" header", pos);
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 1 || n > 10000) throw ParseError("edge list order out of range", offsets[0]);
  if (m < 0 || static_cast<std::size_t>(2 * m + 2) != numbers.size()) {
    throw ParseError("edge count in header does not match the number of edge lines",
                     offsets[1]);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 2; k < numbers.size(); k += 2) {
    const long long u = numbers[k];
    const long long v = numbers[k + 1];
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("edge endpoint outside 1..n", offsets[u < 1 || u > n ? k : k + 1]);
    }
    if (u == v) throw ParseError("self-loop in edge list", offsets[k]);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string encode_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6:
      return encode_graph6(g) + "\n";
    case GraphFormat::EdgeList:
      return encode_edge_list(g);
    case GraphFormat::Dot:
      return encode_dot(g);
  }
  return {};
}

Graph read_graph(std::string_view text) {
  std::size_t start = 0;
  // Skip blank and comment lines to find the first content line.
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(start, nl - start));
    if (!line.empty() && line.front() != '#') {
      bool numeric = true;
      int fields = 0;
      bool in_field = false;
      for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          in_field = false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          if (!in_field) ++fields;
          in_field = true;
        } else {
          numeric = false;
          break;
        }
      }
      if (numeric && fields == 2) return decode_edge_list(text);
      try {
        return decode_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError("graph6: " + e.reason(), start + e.offset());
      }
    }
    start = nl + 1;
  }
  throw ParseError("no graph found in input", text.size());
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(start, nl - start));
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(decode_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("graph6 line: " + e.reason(), start + e.offset());
      }
    }
    start = nl + 1;
  }
  return out;
}

}  // namespace permgraph
