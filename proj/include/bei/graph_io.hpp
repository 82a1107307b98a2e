#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// graph6 short form only (n <= 62). A trailing newline and an optional
// ">>graph6<<" header are tolerated.
Graph decode_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Edge list: first line n, then "u v" per line (0-based);
// blank lines and '#' comments are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// One graph6 per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace bei
