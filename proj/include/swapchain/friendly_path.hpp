#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swapchain/cycle_frame.hpp"
#include "swapchain/f_matrix.hpp"

namespace swapchain {

/// Chord positions A_1..A_L, rook-adjacent in sequence, from the band next
/// to the main diagonal to the band next to the small diagonal.
struct FriendlyPath {
  std::vector<Pos> positions;
  /// Lowest same-type cousin of each position.
  std::vector<Pos> witnesses;
};

/// King-connected set of unfriendly chords meeting every rook path between
/// the two bands.
struct SteinhausSet {
  std::vector<Pos> cells;
  std::vector<Pos> cousin_set;
  /// Common type of the cells; the cousin set carries 1 - type.
  int type = 0;
};

using FriendlyResult = std::variant<FriendlyPath, SteinhausSet>;

/// A chord with some cousin of the same type.
bool is_friendly(const FMatrix& f, Pos p);

/// Lowest same-type cousin of a chord, if any.
std::optional<Pos> cousin_witness(const FMatrix& f, Pos p);

/// Breadth-first search over friendly chords, lexicographic tie-break;
/// otherwise the first blocking king-component of unfriendly chords.
/// Requires l >= 3 and the diagonals to give differing root types whenever
/// a friendly rook crossing exists (always true at Z = G).
FriendlyResult find_friendly_path(const FMatrix& f);

/// A'_i = A_i for type-0 chords, otherwise its cousin witness.
/// Throws NoCousinWitness if a position is not friendly.
std::vector<Pos> adjusted_positions(const FriendlyPath& path, const FMatrix& f);

/// Empty string when valid, otherwise the first violated clause.
std::string check_friendly_path(const FMatrix& f, const FriendlyPath& path);
std::string check_steinhaus_set(const FMatrix& f, const SteinhausSet& set);

/// True when the set's cousin set meets every down-line and up-line.
bool cousin_set_meets_all_lines(const SteinhausSet& set, int ell);

/// Rook-connectivity between the bands over `allowed` chords.
bool bands_connected(int ell, const std::vector<char>& allowed_row_major);

}  // namespace swapchain
