#include <doctest.h>

#include <deque>
#include <map>

#include "support.hpp"
#include "swapchain/errors.hpp"
#include "swapchain/switch_distance.hpp"

namespace sc = swapchain;

namespace {

// Plain BFS over every switch, entries kept within [-1, 2].
int bfs_switch_distance(const sc::IntMatrix& start, int cap) {
  std::map<std::vector<int>, int> dist{{start.cells, 0}};
  std::deque<sc::IntMatrix> q{start};
  while (!q.empty()) {
    const sc::IntMatrix m = q.front();
    q.pop_front();
    const int d = dist[m.cells];
    if (m.is_binary()) return d;
    if (d == cap) continue;
    for (std::size_t r1 = 0; r1 < m.rows; ++r1) {
      for (std::size_t r2 = r1 + 1; r2 < m.rows; ++r2) {
        for (std::size_t c1 = 0; c1 < m.cols; ++c1) {
          for (std::size_t c2 = c1 + 1; c2 < m.cols; ++c2) {
            for (int sign : {1, -1}) {
              sc::IntMatrix n = m;
              n.at(r1, c1) += sign;
              n.at(r2, c2) += sign;
              n.at(r1, c2) -= sign;
              n.at(r2, c1) -= sign;
              bool ok = true;
              for (int e : n.cells) ok = ok && e >= -1 && e <= 2;
              if (!ok) continue;
              if (dist.emplace(n.cells, d + 1).second) q.push_back(n);
            }
          }
        }
      }
    }
  }
  return -1;
}

sc::IntMatrix from(std::vector<std::vector<int>> rows) {
  sc::IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

TEST_CASE("switch distance examples") {
  const auto binary = from({{1, 0}, {0, 1}});
  CHECK(sc::switch_distance(binary, {1, 1}, {1, 1}) == 0);
  // A single 2 whose same-row and same-column partners leave room for one switch.
  const auto one = from({{2, 0}, {0, 1}});
  CHECK(sc::switch_distance(one, {2, 1}, {2, 1}) == 1);
  const auto two = from({{2, 0, 0}, {0, 2, 0}, {0, 0, 0}, {0, 0, 2}});
  const auto d = sc::switch_distance(two, {2, 2, 0, 2}, {2, 2, 2});
  REQUIRE(d.has_value());
  CHECK(*d == bfs_switch_distance(two, 6));
  CHECK(*d <= 3);
  CHECK_THROWS_AS(sc::switch_distance(one, {1, 1}, {2, 1}), sc::Error);
}

TEST_CASE("switch distance matches plain BFS on random hat-like matrices") {
  sc::Rng rng(51);
  int nonzero = 0;
  for (int n = 0; n < 300; ++n) {
    const std::size_t k = 2 + rng.below(2);
    const std::size_t l = 2 + rng.below(2);
    sc::IntMatrix m(k, l);
    for (auto& e : m.cells) {
      const auto x = rng.below(10);
      e = x < 4 ? 0 : x < 7 ? 1 : x < 9 ? 2 : -1;
    }
    const auto rows = m.row_sums();
    const auto cols = m.col_sums();
    bool feasible = true;
    for (int r : rows) feasible = feasible && r >= 0 && r <= static_cast<int>(l);
    for (int c : cols) feasible = feasible && c >= 0 && c <= static_cast<int>(k);
    if (!feasible) continue;
    const int want = bfs_switch_distance(m, 6);
    const auto got = sc::switch_distance(m, rows, cols);
    if (want < 0) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(*got == want);
      if (want > 0) ++nonzero;
    }
  }
  CHECK(nonzero > 20);
}
