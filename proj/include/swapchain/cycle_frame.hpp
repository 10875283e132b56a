#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace swapchain {

/// A cell (r, c) of an l x l cycle-local matrix: the vertex pair (u_r, v_c).
/// Cell (i, i) is the main diagonal, (i, i+1 mod l) the small diagonal, and
/// every other cell is a chord.
struct Pos {
  int r = 0;
  int c = 0;
  friend auto operator<=>(const Pos&, const Pos&) = default;
};

inline int mod(int x, int m) noexcept {
  const int y = x % m;
  return y < 0 ? y + m : y;
}

/// Offset c - r mod l: 0 on the main diagonal, 1 on the small diagonal.
inline int offset(Pos p, int ell) noexcept { return mod(p.c - p.r, ell); }

inline bool is_main_diagonal(Pos p, int ell) noexcept { return offset(p, ell) == 0; }
inline bool is_small_diagonal(Pos p, int ell) noexcept { return offset(p, ell) == 1; }
inline bool is_chord(Pos p, int ell) noexcept { return offset(p, ell) >= 2; }

/// Shortest chords one rook step from the main diagonal (offset l-1); their
/// root is the small-diagonal cell (r-1, r).
inline bool is_start_chord(Pos p, int ell) noexcept { return ell >= 3 && offset(p, ell) == ell - 1; }
/// Shortest chords one rook step from the small diagonal (offset 2); their
/// root is the main-diagonal cell (r+1, r+1).
inline bool is_end_chord(Pos p, int ell) noexcept { return ell >= 3 && offset(p, ell) == 2; }

inline Pos start_root(Pos p, int ell) noexcept { return {mod(p.r - 1, ell), p.r}; }
inline Pos end_root(Pos p, int ell) noexcept { return {mod(p.r + 1, ell), mod(p.r + 1, ell)}; }

/// All chord cells, row-major.
std::vector<Pos> all_chords(int ell);

/// Off-diagonal cousins of a chord: rows {c-1, c} x columns {r, r+1}, mod l.
/// Sorted; at most four. Throws DiagonalPosition for a diagonal cell.
std::vector<Pos> cousins(Pos p, int ell);

/// The rook neighbours of a cell with wrap-around that avoid the main
/// diagonal, sorted.
std::vector<Pos> rook_neighbours(Pos p, int ell);

/// King neighbours restricted to chord cells, sorted.
std::vector<Pos> king_chord_neighbours(Pos p, int ell);

/// Rook-step distance between two off-main-diagonal cells, wrapping
/// around and never entering the main diagonal. -1 if unreachable.
int rook_distance(Pos a, Pos b, int ell);

/// Chord cells of the i-th down-line (i+m, i-m) and up-line (i-m, i+m), m >= 1.
std::vector<Pos> down_line(int i, int ell);
std::vector<Pos> up_line(int i, int ell);

}  // namespace swapchain
