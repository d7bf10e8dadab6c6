#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permgraph/graph.hpp"

namespace permgraph {

// graph6: N(n) followed by the upper triangle in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte, offset 63.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws
// ParseError carrying the offending byte offset.
Graph decode_graph6(std::string_view text);

// "n m" header, then one "u v" line per edge (u < v, lexicographic order).
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

// Deterministic DOT: every vertex listed in order, then edges u -- v, u < v.
std::string encode_dot(const Graph& g, std::string_view name = "G");

enum class GraphFormat { Graph6, EdgeList, Dot };

std::string encode_graph(const Graph& g, GraphFormat format);

// Guesses edge list vs graph6 from the first non-blank line.
Graph read_graph(std::string_view text);

// One graph6 string per non-blank line; lines starting with '#' are skipped.
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace permgraph
