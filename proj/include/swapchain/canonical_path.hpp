#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/cycle_decomp.hpp"
#include "swapchain/int_matrix.hpp"
#include "swapchain/path_along_cycle.hpp"
#include "swapchain/rational.hpp"
#include "swapchain/switch_distance.hpp"

namespace swapchain {

struct CanonicalPath {
  std::vector<BipartiteGraph> states;  ///< X = states.front(), Y = states.back()
  std::vector<Swap> swaps;
  std::vector<AlternatingCycle> cycles;
  /// Index into `states` of each H_i = X ^ (C_1 u ... u C_{i-1}), plus Y.
  std::vector<std::size_t> fixed_points;
  CycleDiagnostics diagnostics;
};

/// The path for (X, Y, s): cycles C_1..C_m in decomposition order, each
/// handled by path_along_cycle. Throws PairingMismatch.
CanonicalPath canonical_path(const BipartiteGraph& x, const BipartiteGraph& y, const Pairing& s);

struct Certificate {
  std::size_t step = 0;
  std::optional<Swap> swap;          ///< swap leading into this state
  std::optional<int> switch_distance;  ///< nullopt: above the cap
};

/// switch_distance(hat(X, Y, Z)) for every state Z on the path.
std::vector<Certificate> certify(const BipartiteGraph& x, const BipartiteGraph& y,
                                 const CanonicalPath& path, SwitchDistanceOptions opts = {});

struct PathShare {
  std::vector<BipartiteGraph> states;
  Rational probability;
};

/// Distinct paths over all pairings with |{s : path(X,Y,s) = gamma}| / t.
/// Sorted by state keys. Throws TooManyPairings above `max_pairings`.
std::vector<PathShare> path_distribution(const BipartiteGraph& x, const BipartiteGraph& y,
                                         std::size_t max_pairings = 5000);

}  // namespace swapchain
