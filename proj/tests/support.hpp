#pragma once

// Brute-force oracles and instance generators shared by the test binaries.
// Nothing here calls the library code it is meant to check.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/cycle_decomp.hpp"
#include "swapchain/degree_sequence.hpp"
#include "swapchain/f_matrix.hpp"
#include "swapchain/random.hpp"

namespace oracle {

using Margins = std::pair<std::vector<int>, std::vector<int>>;

/// Every k x l 0-1 matrix, bucketed by (row sums, column sums) when both are
/// non-increasing. k * l must stay small (<= 20).
std::map<Margins, std::uint64_t> margin_counts(int k, int l);

/// All k x l 0-1 matrices with the given margins, by full bitmask scan.
std::vector<swapchain::BipartiteGraph> realizations(const swapchain::BipartiteDegreeSequence& ds);

/// All non-increasing pairs (a, b) with a_i <= l, b_j <= k and equal sums.
std::vector<swapchain::BipartiteDegreeSequence> all_sequences(int k, int l);

/// Number of (u1<u2, v1<v2) submatrices holding exactly one diagonal.
int submatrix_swap_count(const swapchain::BipartiteGraph& g);

/// BFS distance in the swap graph, using only the submatrix scan above.
int bfs_distance(const swapchain::BipartiteGraph& a, const swapchain::BipartiteGraph& b);

/// Pearson chi-squared p-value against the uniform distribution.
double chi_squared_uniform_p(const std::vector<std::uint64_t>& counts);

/// Exhaustive friendly-path oracle on an initial F-matrix (Z = G).
/// Cousins of (r, c) are rows {c-1, c} x columns {r, r+1} minus the two
/// diagonals; paths are sequences of distinct friendly chords, consecutive
/// ones sharing a row or column with the other index off by one (mod l),
/// from offset l-1 to offset 2. Returns the minimum length, or nullopt.
std::optional<int> shortest_friendly_path(const std::vector<std::vector<int>>& types);

/// Chord types of an F-matrix as a dense l x l table (-1 on diagonals).
std::vector<std::vector<int>> chord_table(const swapchain::FMatrix& f);

/// A single-cycle instance: E(G ^ G') is `cycle`, and X, Y are reached
/// from G and G' by swaps that never touch a cycle edge, with X ^ G and
/// G' ^ Y disjoint.
struct CycleInstance {
  swapchain::BipartiteGraph g;
  swapchain::BipartiteGraph g2;
  swapchain::BipartiteGraph x;
  swapchain::BipartiteGraph y;
  swapchain::AlternatingCycle cycle;
};

/// Chord types in row-major chord order, drawn from one of three families:
/// independent bits with a random bias, circulant (type fixed per offset
/// c - r), or circulant with a few cells flipped. Configurations without a
/// friendly path are circulant-like, so the last two families reach them.
std::vector<int> random_chord_types(int ell, swapchain::Rng& rng);

/// Cycle instance with ell cycle vertices per side plus `extra` outside
/// vertices. Chords follow random_chord_types; other cells are 1 with
/// probability `density`.
CycleInstance random_cycle_instance(int ell, int extra, double density, int env_swaps,
                                    swapchain::Rng& rng);

}  // namespace oracle
