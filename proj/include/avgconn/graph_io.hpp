#pragma once

#include <iosfwd>
#include <string>

#include "avgconn/multigraph.hpp"

namespace avgconn {

enum class GraphFormat { graph6, edgelist };

// graph6 encoding of a simple graph (standard format, bit-exact).
std::string to_graph6(const MultiGraph& g);
MultiGraph from_graph6(const std::string& line);

// Multigraph edge list: header "n m" where m counts the distinct pairs that
// follow, then one line "u v mult" per pair, 0-based, u < v, ascending.
std::string to_edge_list(const MultiGraph& g);
MultiGraph from_edge_list(const std::string& text);

MultiGraph read_graph(std::istream& in, GraphFormat format);
void write_graph(std::ostream& out, const MultiGraph& g, GraphFormat format);

}  // namespace avgconn
