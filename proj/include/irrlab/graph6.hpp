#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "irrlab/graph.hpp"

namespace irrlab {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte,
// each byte offset by 63. Short form for n <= 62, '~' + 18-bit form above.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Plain edge list: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// Reads every graph from a stream. Edge-list input is recognised by a first
// non-blank line of two integers; otherwise each non-blank line is graph6.
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace irrlab
