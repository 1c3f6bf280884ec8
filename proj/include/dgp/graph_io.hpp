#pragma once

#include <iosfwd>
#include <string>

#include "dgp/graph.hpp"

namespace dgp {

/// Reads the text format
///
///     # optional comments
///     graph <V> <N>
///     <u> <v>        (N lines, 0-based vertices, edge id = position)
///
/// Blank lines and `#` lines are ignored anywhere. Throws ParseError with the
/// offending line number.
MultiGraph read_graph(std::istream& in);
MultiGraph parse_graph(const std::string& text);
MultiGraph load_graph_file(const std::string& path);

/// Inverse of read_graph. Edge ids are implied by position, so a graph whose
/// ids are not 1..N loses them.
std::string format_graph(const MultiGraph& g);

}  // namespace dgp
