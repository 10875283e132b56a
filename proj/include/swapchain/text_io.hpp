#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/degree_sequence.hpp"

namespace swapchain {

// Degree sequence: two lines of space-separated integers, a then b.
// Graph: "k l" on the first line, then k lines of l characters '0'/'1'.
// Blank lines and lines starting with '#' are ignored when parsing graphs.

BipartiteDegreeSequence parse_degree_sequence(std::string_view text);
BipartiteGraph parse_graph(std::string_view text);

std::string format_degree_sequence(const BipartiteDegreeSequence& ds);
std::string format_graph(const BipartiteGraph& g);
std::string format_swap(const Swap& s);

BipartiteDegreeSequence read_degree_sequence_file(const std::string& path);
BipartiteGraph read_graph_file(const std::string& path);

}  // namespace swapchain
