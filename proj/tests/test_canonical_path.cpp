#include <doctest.h>

#include <set>

#include "support.hpp"
#include "swapchain/canonical_path.hpp"
#include "swapchain/errors.hpp"
#include "swapchain/f_matrix.hpp"
#include "swapchain/mixing_lab.hpp"
#include "swapchain/path_along_cycle.hpp"

namespace sc = swapchain;

namespace {

void check_path(const sc::BipartiteGraph& x, const sc::BipartiteGraph& y, const sc::Pairing& s,
                const sc::CanonicalPath& p) {
  REQUIRE(p.states.size() == p.swaps.size() + 1);
  CHECK(p.states.front() == x);
  CHECK(p.states.back() == y);
  for (std::size_t i = 0; i < p.swaps.size(); ++i) {
    CHECK(sc::apply_swap(p.states[i], p.swaps[i]) == p.states[i + 1]);
    CHECK(p.states[i + 1].same_degrees(x));
  }
  // H_i = X ^ (C_1 u ... u C_{i-1}).
  const auto cycles = sc::decompose(s).cycles;
  REQUIRE(p.fixed_points.size() == cycles.size() + 1);
  sc::BipartiteGraph h = x;
  for (std::size_t i = 0; i <= cycles.size(); ++i) {
    CHECK(p.states[p.fixed_points[i]] == h);
    if (i == cycles.size()) break;
    for (std::size_t j = 0; j < cycles[i].ell(); ++j) {
      h.toggle_edge(cycles[i].main(j).u, cycles[i].main(j).v);
      h.toggle_edge(cycles[i].small(j).u, cycles[i].small(j).v);
    }
  }
}

sc::BipartiteGraph eight_x() {
  return sc::BipartiteGraph::from_rows({{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}
sc::BipartiteGraph eight_y() {
  return sc::BipartiteGraph::from_rows({{0, 1, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}});
}

}  // namespace

TEST_CASE("trivial canonical paths") {
  const auto a = sc::BipartiteGraph::from_rows({{1, 0}, {0, 1}});
  const auto b = sc::BipartiteGraph::from_rows({{0, 1}, {1, 0}});
  const auto same = sc::canonical_path(a, a, sc::all_pairings(a, a).front());
  CHECK(same.states.size() == 1);
  CHECK(same.swaps.empty());
  const auto one = sc::canonical_path(a, b, sc::all_pairings(a, b).front());
  CHECK(one.swaps.size() == 1);
  CHECK(one.diagnostics.direct_swaps == 1);
}

TEST_CASE("canonical paths replay on every (X, Y, s) of small spaces") {
  for (const auto& ds : {sc::BipartiteDegreeSequence({2, 2, 2}, {3, 2, 1}),
                         sc::BipartiteDegreeSequence({1, 1, 1}, {1, 1, 1}),
                         sc::BipartiteDegreeSequence({2, 2, 1, 1}, {2, 2, 1, 1}),
                         sc::BipartiteDegreeSequence({2, 2, 2, 2}, {2, 2, 2, 2})}) {
    const auto space = sc::enumerate_states(ds);
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (std::size_t j = 0; j < space.size(); j += (space.size() > 20 ? 7 : 1)) {
        for (const auto& s : sc::all_pairings(space.states[i], space.states[j])) {
          const auto p = sc::canonical_path(space.states[i], space.states[j], s);
          check_path(space.states[i], space.states[j], s, p);
        }
      }
    }
  }
}

TEST_CASE("semi-regular certificates stay within distance 2") {
  const sc::BipartiteDegreeSequence ds({2, 2, 2}, {3, 2, 1});
  REQUIRE(ds.is_semi_regular());
  const auto space = sc::enumerate_states(ds);
  for (const auto& x : space.states) {
    for (const auto& y : space.states) {
      for (const auto& s : sc::all_pairings(x, y)) {
        const auto p = sc::canonical_path(x, y, s);
        for (const auto& c : sc::certify(x, y, p)) {
          REQUIRE(c.switch_distance.has_value());
          CHECK(*c.switch_distance <= 2);
        }
      }
    }
  }
}

TEST_CASE("path distribution") {
  const auto a = sc::BipartiteGraph::from_rows({{1, 0}, {0, 1}});
  const auto b = sc::BipartiteGraph::from_rows({{0, 1}, {1, 0}});
  const auto single = sc::path_distribution(a, b);
  REQUIRE(single.size() == 1);
  CHECK(single[0].probability == 1);

  const auto eight = sc::path_distribution(eight_x(), eight_y());
  sc::Rational total = 0;
  for (const auto& share : eight) {
    CHECK(denominator(share.probability) <= 2);
    total += share.probability;
  }
  CHECK(total == 1);

  const auto space = sc::enumerate_states({{2, 2, 2, 2}, {2, 2, 2, 2}});
  for (std::size_t i = 0; i < space.size(); i += 11) {
    for (std::size_t j = 0; j < space.size(); j += 13) {
      sc::Rational sum = 0;
      for (const auto& share : sc::path_distribution(space.states[i], space.states[j])) {
        sum += share.probability;
      }
      CHECK(sum == 1);
    }
  }
  CHECK_THROWS_AS(sc::path_distribution(eight_x(), eight_y(), 1), sc::Error);
}

TEST_CASE("single-cycle paths with environments") {
  sc::Rng rng(61);
  int split = 0;
  for (int n = 0; n < 600; ++n) {
    const int ell = 2 + static_cast<int>(rng.below(7));
    const auto inst = oracle::random_cycle_instance(ell, static_cast<int>(rng.below(3)), 0.5, 5, rng);
    const auto p = sc::path_along_cycle(inst.g, inst.g2, inst.x, inst.y, inst.cycle);
    REQUIRE(p.states.size() == p.swaps.size() + 1);
    CHECK(p.states.front() == inst.g);
    CHECK(p.states.back() == inst.g2);
    for (std::size_t i = 0; i < p.swaps.size(); ++i) {
      CHECK(sc::apply_swap(p.states[i], p.swaps[i]) == p.states[i + 1]);
    }
    if (ell == 2) CHECK(p.swaps.size() == 1);
    CHECK(static_cast<int>(p.swaps.size()) >= ell - 1);
    const auto& d = p.diagnostics;
    CHECK(d.same_state_failed <= d.same_state_checked);
    CHECK(d.van_friendly_failed == 0);
    for (const auto& r : d.ok_ko_steps) {
      CHECK(r.diff_length <= 2 + 2 * std::max(r.anchor_distance, 1) + 2);
    }
    if (d.split_cycles > 0) ++split;
  }
  CHECK(split > 20);
}

TEST_CASE("path_along_cycle preconditions") {
  sc::Rng rng(62);
  const auto inst = oracle::random_cycle_instance(4, 1, 0.5, 3, rng);
  CHECK_THROWS_AS(sc::path_along_cycle(inst.g, inst.g, inst.x, inst.y, inst.cycle), sc::Error);
  // X ^ G overlapping the cycle.
  CHECK_THROWS_AS(sc::path_along_cycle(inst.g, inst.g2, inst.g2, inst.y, inst.cycle), sc::Error);
}
