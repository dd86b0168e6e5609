#ifndef SPECDL_GRAPH_IO_HPP
#define SPECDL_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "specdl/graph.hpp"

namespace specdl {

// Edge-list format: first line "n m", then m lines "u v" with 0 <= u < v < n.
Graph parse_edge_list(std::string_view text);

// Standard graph6 (n <= 62 header form: one byte n+63, column-major upper
// triangle, 6 bits per byte offset by 63).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

} // namespace specdl

#endif
