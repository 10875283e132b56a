#pragma once

#include <map>
#include <string>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/cycle_decomp.hpp"
#include "swapchain/ok_ko.hpp"

namespace swapchain {

struct OkKoRecord {
  SpecKind from = SpecKind::Initial;
  SpecKind to = SpecKind::Initial;
  int swaps = 0;
  int diff_length = 0;
  /// Rook distance between consecutive anchors (0 for initial/final legs).
  int anchor_distance = 0;
};

struct CycleDiagnostics {
  int friendly_cycles = 0;
  int split_cycles = 0;
  int direct_swaps = 0;  ///< 4-cycles done in one swap
  int length_one_paths = 0;
  int max_depth = 0;
  /// Split cases: "J1_T0", "J1_T1", "J2_T0", "J2_T1" by (j' = 1 or >= 2, t),
  /// and "fallback" when no same-state pattern was found.
  std::map<std::string, int> split_cases;
  /// Same-state pattern checks on cycles without a friendly path.
  int same_state_checked = 0;
  int same_state_failed = 0;
  /// For j' >= 2 splits: the sub-cycle around i had a friendly path.
  int van_friendly_checked = 0;
  int van_friendly_failed = 0;
  int fine_tune_interleaved = 0;
  int fine_tune_sequential = 0;
  std::vector<OkKoRecord> ok_ko_steps;

  void merge(const CycleDiagnostics& other);
};

struct CyclePath {
  std::vector<Swap> swaps;
  std::vector<BipartiteGraph> states;  ///< G = states.front(), G' = states.back()
  CycleDiagnostics diagnostics;
};

/// Swaps turning `z` into `z` with `cycle` flipped (mains removed, smalls
/// added). Friendly cycles walk the OK/KO fixed points; others are split
/// along one chord and solved recursively.
std::vector<Swap> solve_cycle(const BipartiteGraph& z, const AlternatingCycle& cycle,
                              CycleDiagnostics& diag, int depth = 0);

/// The path from G to G' along `cycle` in the environment (X, Y).
/// Throws PreconditionViolation when E(G ^ G') is not the cycle or the
/// three differences X^G, G^G', G'^Y are not pairwise disjoint.
CyclePath path_along_cycle(const BipartiteGraph& g, const BipartiteGraph& g2,
                           const BipartiteGraph& x, const BipartiteGraph& y,
                           const AlternatingCycle& cycle);

}  // namespace swapchain
