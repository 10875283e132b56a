#pragma once

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/cycle_decomp.hpp"
#include "swapchain/cycle_frame.hpp"
#include "swapchain/int_matrix.hpp"

namespace swapchain {

/// Cycle-local picture of Z while G is turned into G' along one cycle.
/// Diagonal cells hold Z's cycle edges (0/1); chord cells hold
/// M_G + M_G' + M_Z in 0..3, so a chord's type is cell >= 2 and its
/// presence in Z is the parity.
struct FMatrix {
  int ell = 0;
  IntMatrix cells;

  int at(Pos p) const { return cells.at(static_cast<std::size_t>(p.r), static_cast<std::size_t>(p.c)); }
  int& at(Pos p) { return cells.at(static_cast<std::size_t>(p.r), static_cast<std::size_t>(p.c)); }

  /// Chord type (its value in G and G').
  int type(Pos p) const { return at(p) >= 2 ? 1 : 0; }

  /// Cells of a chord-only matrix at Z = G with the given chord types.
  static FMatrix initial(int ell, const std::vector<int>& chord_types_row_major);
};

/// Throws CycleMismatch unless E(G ^ G') is exactly the cycle with the
/// mains in G and the smalls in G'.
void require_cycle_difference(const BipartiteGraph& g, const BipartiteGraph& g2,
                              const AlternatingCycle& cycle);

FMatrix f_matrix(const BipartiteGraph& g, const BipartiteGraph& g2, const BipartiteGraph& z,
                 const AlternatingCycle& cycle);

/// M_X + M_Y - M_Z. Throws ShapeMismatch.
IntMatrix hat_matrix(const BipartiteGraph& x, const BipartiteGraph& y, const BipartiteGraph& z);

/// Cycle-local entries (u_r, v_c) of a full hat matrix.
IntMatrix restrict_to_cycle(const IntMatrix& hat, const AlternatingCycle& cycle);

/// Conversion table between F and the cycle-local hat(G + G' - Z):
/// diagonal bits flipped, chords -1,0,1,2 <-> 1,0,3,2.
IntMatrix f_to_hat(const FMatrix& f);
FMatrix hat_to_f(const IntMatrix& local_hat);

}  // namespace swapchain
