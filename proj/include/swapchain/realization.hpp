#pragma once

#include <span>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/degree_sequence.hpp"

namespace swapchain {

/// Runs the greedy realization; true iff it completes.
bool is_graphical(const BipartiteDegreeSequence& ds);

/// Greedy realization: each V-vertex in turn (highest degree first) takes the
/// U-vertices of highest residual degree, ties to the lowest index.
/// Row i realizes a[i], column j realizes b[j]. Throws NotGraphical.
BipartiteGraph greedy_realize(const BipartiteDegreeSequence& ds);

struct PushUpResult {
  BipartiteGraph graph;
  std::vector<Swap> swaps;
};

/// Rewires `v` so its neighbourhood becomes the d(v) U-vertices of highest
/// degree (ties to the lowest index), using at most d(v) swaps.
///
/// When `active` is non-empty only columns with active[j] != 0 count towards
/// U-degrees and only they may serve as swap witnesses; `v` must be active.
PushUpResult push_up(const BipartiteGraph& g, int v, std::span<const char> active = {});

/// The U-vertices push_up targets for `v`, sorted by index.
std::vector<int> push_up_target(const BipartiteGraph& g, int v,
                                 std::span<const char> active = {});

}  // namespace swapchain
