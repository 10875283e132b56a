#pragma once

#include <optional>
#include <vector>

#include "swapchain/int_matrix.hpp"

namespace swapchain {

struct SwitchDistanceOptions {
  int cap = 6;
  /// Intermediate entries stay within [-entry_ext, 1 + entry_ext].
  int entry_ext = 1;
};

/// Fewest switches (+1 on one diagonal of a 2x2 submatrix, -1 on the other)
/// turning `m` into a 0-1 matrix; nullopt when more than `cap` are needed.
///
/// Switches commute, so every solution contains a switch repairing the first
/// out-of-range entry in the needed direction; the search branches on those
/// only (iterative deepening, badness/4 lower bound, memo of failed states).
/// Throws MarginMismatch if the margins differ from the given ones.
std::optional<int> switch_distance(const IntMatrix& m, const std::vector<int>& row_margins,
                                   const std::vector<int>& col_margins,
                                   SwitchDistanceOptions opts = {});

}  // namespace swapchain
