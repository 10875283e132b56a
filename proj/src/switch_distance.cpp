#include "swapchain/switch_distance.hpp"

#include <string>
#include <unordered_map>

#include "swapchain/errors.hpp"

namespace swapchain {

namespace {

int badness(const IntMatrix& m) {
  int b = 0;
  for (int x : m.cells) {
    if (x > 1) b += x - 1;
    else if (x < 0) b += -x;
  }
  return b;
}

std::string state_key(const IntMatrix& m) {
  std::string s(m.cells.size(), '\0');
  for (std::size_t i = 0; i < m.cells.size(); ++i) s[i] = static_cast<char>(m.cells[i] + 64);
  return s;
}

class Search {
 public:
  Search(IntMatrix m, int ext) : m_(std::move(m)), lo_(-ext), hi_(1 + ext) {}

  bool run(int budget) {
    const int bad = badness(m_);
    if (bad == 0) return true;
    if (budget <= 0 || (bad + 3) / 4 > budget) return false;
    const std::string key = state_key(m_);
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) return false;

    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (std::size_t i = 0; i < m_.cells.size(); ++i) {
      if (m_.cells[i] < 0 || m_.cells[i] > 1) {
        r0 = i / m_.cols;
        c0 = i % m_.cols;
        break;
      }
    }
    // delta is applied at (r0,c0) and (r2,c2); -delta at (r0,c2) and (r2,c0).
    const int delta = m_.at(r0, c0) > 1 ? -1 : 1;
    for (std::size_t r2 = 0; r2 < m_.rows; ++r2) {
      if (r2 == r0) continue;
      for (std::size_t c2 = 0; c2 < m_.cols; ++c2) {
        if (c2 == c0) continue;
        if (!in_range(m_.at(r2, c2) + delta) || !in_range(m_.at(r0, c2) - delta) ||
            !in_range(m_.at(r2, c0) - delta)) {
          continue;
        }
        apply(r0, c0, r2, c2, delta);
        const bool ok = run(budget - 1);
        apply(r0, c0, r2, c2, -delta);
        if (ok) return true;
      }
    }
    failed_[key] = budget;
    return false;
  }

 private:
  bool in_range(int x) const { return x >= lo_ && x <= hi_; }

  void apply(std::size_t r0, std::size_t c0, std::size_t r2, std::size_t c2, int delta) {
    m_.at(r0, c0) += delta;
    m_.at(r2, c2) += delta;
    m_.at(r0, c2) -= delta;
    m_.at(r2, c0) -= delta;
  }

  IntMatrix m_;
  int lo_;
  int hi_;
  std::unordered_map<std::string, int> failed_;
};

}  // namespace

std::optional<int> switch_distance(const IntMatrix& m, const std::vector<int>& row_margins,
                                   const std::vector<int>& col_margins,
                                   SwitchDistanceOptions opts) {
  if (m.row_sums() != row_margins || m.col_sums() != col_margins) {
    throw Error(ErrorCode::MarginMismatch, "matrix margins differ from the degree sequence");
  }
  Search search(m, opts.entry_ext);
  for (int budget = 0; budget <= opts.cap; ++budget) {
    if (search.run(budget)) return budget;
  }
  return std::nullopt;
}

}  // namespace swapchain
