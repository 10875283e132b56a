#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace swapchain {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> cells;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c, int fill = 0) : rows(r), cols(c), cells(r * c, fill) {}

  int& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
  int at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  /// Every entry is 0 or 1.
  bool is_binary() const noexcept;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

}  // namespace swapchain
