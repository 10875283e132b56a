#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swapchain/bipartite_graph.hpp"

namespace swapchain {

/// Swap sequence turning `g1` into `g2`, of length at most 2|E|.
///
/// Columns are peeled off by decreasing degree (index tie-break). Each one
/// is pushed up in both graphs; the G1 swaps come first, then the G2 swaps
/// reversed and inverted. The result is replay-checked before returning.
/// Throws ShapeMismatch / DegreeMismatch.
std::vector<Swap> ryser_sequence(const BipartiteGraph& g1, const BipartiteGraph& g2);

/// Exact breadth-first distance in the swap graph, or nullopt when it
/// exceeds `cap`. Exponential in general; meant for small instances.
std::optional<int> swap_distance(const BipartiteGraph& g1, const BipartiteGraph& g2, int cap);

/// A shortest swap sequence (BFS), or nullopt when longer than `cap`.
std::optional<std::vector<Swap>> shortest_swap_sequence(const BipartiteGraph& g1,
                                                        const BipartiteGraph& g2, int cap);

}  // namespace swapchain
