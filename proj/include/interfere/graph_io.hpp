#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "interfere/graph.hpp"

namespace interfere {

/// Edge-list text: first significant line is the vertex count n, then one
/// "u v" pair per line. '#' starts a comment; blank lines are ignored.
/// Throws FormatError for malformed lines, self-loops, duplicates and
/// out-of-range endpoints.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

inline constexpr std::size_t kMaxGraph6Order = 62;

/// Short-form graph6 (n <= 62). An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
/// One graph per nonempty line.
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace interfere
