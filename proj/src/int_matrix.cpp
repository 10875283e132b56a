#include "swapchain/int_matrix.hpp"

#include <algorithm>

namespace swapchain {

std::vector<int> IntMatrix::row_sums() const {
  std::vector<int> s(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) s[r] += at(r, c);
  }
  return s;
}

std::vector<int> IntMatrix::col_sums() const {
  std::vector<int> s(cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) s[c] += at(r, c);
  }
  return s;
}

bool IntMatrix::is_binary() const noexcept {
  return std::all_of(cells.begin(), cells.end(), [](int x) { return x == 0 || x == 1; });
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out += ' ';
      out += std::to_string(at(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace swapchain
