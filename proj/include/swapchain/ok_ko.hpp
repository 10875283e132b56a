#pragma once

#include <string_view>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/cycle_decomp.hpp"
#include "swapchain/cycle_frame.hpp"

namespace swapchain {

enum class SpecKind { Initial, OK, KO, Final };

std::string_view spec_kind_name(SpecKind k) noexcept;

/// A fixed point on the way from G to G' along one cycle.
///
/// Cycle edges are numbered main(i) -> 2i, small(i) -> 2i+1. An OK anchor
/// (r, c) is a type-1 chord: edges 2r+1 .. 2c-1 (cyclically) are flipped and
/// the chord is removed. A KO anchor (r, c) is a type-0 chord: edges
/// 2c .. 2r are flipped and the chord is added. Initial is G, Final is G'.
struct OKKOSpec {
  SpecKind kind = SpecKind::Initial;
  Pos anchor{};

  friend bool operator==(const OKKOSpec&, const OKKOSpec&) = default;
};

/// Linear cycle-edge indices flipped by a spec.
std::vector<int> flipped_edges(const OKKOSpec& spec, int ell);

/// The cycle edge with linear index `e`.
Edge cycle_edge(const AlternatingCycle& cycle, int e);

/// The realization described by `spec`, built from `g` (cycle mains in g,
/// smalls absent). Throws SpecViolation if the anchor has the wrong type.
BipartiteGraph pattern_state(const BipartiteGraph& g, const AlternatingCycle& cycle,
                             const OKKOSpec& spec);

struct OkKoStep {
  std::vector<Swap> swaps;
  /// Number of edges in E(L_prev ^ L_next); 0 when the specs coincide.
  int diff_length = 0;
};

/// Swaps from the pattern of `prev` to the pattern of `next`: the symmetric
/// difference must be one alternating cycle, and ryser_sequence is run on
/// the subgraph its vertices span. Throws SpecViolation.
OkKoStep ok_ko_step(const BipartiteGraph& g, const AlternatingCycle& cycle,
                    const BipartiteGraph& l_prev, const OKKOSpec& prev, const OKKOSpec& next);

/// ryser_sequence restricted to the rows and columns touched by E(a ^ b),
/// mapped back to the full graph.
std::vector<Swap> local_ryser(const BipartiteGraph& a, const BipartiteGraph& b);

}  // namespace swapchain
