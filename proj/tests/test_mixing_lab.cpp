#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "support.hpp"
#include "swapchain/errors.hpp"
#include "swapchain/mixing_lab.hpp"

namespace sc = swapchain;

TEST_CASE("state enumeration") {
  CHECK(sc::enumerate_states({{1, 1}, {1, 1}}).size() == 2);
  CHECK(sc::enumerate_states({{1, 1, 1}, {1, 1, 1}}).size() == 6);
  const sc::BipartiteDegreeSequence ds({2, 2, 2}, {3, 2, 1});
  const auto space = sc::enumerate_states(ds);
  CHECK(space.size() == oracle::realizations(ds).size());
  for (std::size_t i = 0; i + 1 < space.size(); ++i) {
    CHECK(space.states[i].key() < space.states[i + 1].key());
    CHECK(space.id(space.states[i]) == i);
  }
  CHECK_THROWS_AS(sc::enumerate_states({{2, 2}, {1, 1}}), sc::Error);
  CHECK_THROWS_AS(sc::enumerate_states({{2, 2, 2, 2}, {2, 2, 2, 2}}, 50), sc::Error);
}

TEST_CASE("kernel") {
  const auto two = sc::build_kernel(sc::enumerate_states({{1, 1}, {1, 1}}));
  CHECK(two.at(0, 0) == 0);
  CHECK(two.at(0, 1) == 1);
  CHECK(two.at(1, 0) == 1);
  CHECK(two.at(1, 1) == 0);
  for (const auto& ds : {sc::BipartiteDegreeSequence({2, 2, 2}, {3, 2, 1}),
                         sc::BipartiteDegreeSequence({2, 2, 1, 1}, {2, 2, 1, 1}),
                         sc::BipartiteDegreeSequence({2, 2, 2, 2}, {2, 2, 2, 2})}) {
    const auto k = sc::build_kernel(sc::enumerate_states(ds));
    CHECK(k.is_symmetric());
    CHECK(k.rows_sum_to_one());
    CHECK(k.uniform_is_stationary());
    CHECK(k.off_diagonal_uniform());
  }
}

TEST_CASE("spectral gap") {
  const auto two = sc::build_kernel(sc::enumerate_states({{1, 1}, {1, 1}}));
  const auto s2 = sc::spectral_gap(two);
  CHECK(s2.lambda2 == doctest::Approx(-1.0));
  CHECK(s2.tau_rel == doctest::Approx(0.5));

  // Complete uniform jump chain: P = (1 - a) I + a J / n has spectrum
  // {1, 1 - a} with 1 - a of multiplicity n - 1.
  const std::size_t n = 5;
  const sc::Rational a(1, 2);
  std::vector<sc::Rational> p(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p[i * n + j] = a / static_cast<long>(n) + (i == j ? 1 - a : sc::Rational(0));
    }
  }
  const auto s = sc::spectral_gap(sc::TransitionMatrix(n, p, 10));
  CHECK(s.lambda2 == doctest::Approx(0.5));
  CHECK(s.lambda_min == doctest::Approx(0.5));
  CHECK(s.residual < 1e-10);

  const auto k = sc::build_kernel(sc::enumerate_states({{2, 2, 2}, {3, 2, 1}}));
  CHECK(sc::spectral_gap(k).lambda2 < 1.0);
  CHECK_THROWS_AS(sc::spectral_gap(sc::TransitionMatrix(1, {sc::Rational(1)}, 1)), sc::Error);
  // Two disconnected states: eigenvalue 1 twice.
  CHECK_THROWS_AS(
      sc::spectral_gap(sc::TransitionMatrix(2, {1, 0, 0, 1}, 1)), sc::Error);
}

TEST_CASE("total-variation mixing time") {
  const auto two = sc::build_kernel(sc::enumerate_states({{1, 1}, {1, 1}}));
  CHECK(sc::tv_mixing_time(two, 0.5) == 0);
  CHECK_THROWS_AS(sc::tv_mixing_time(two, 0.01), sc::Error);

  const auto space = sc::enumerate_states({{2, 2, 2}, {3, 2, 1}});
  const auto k = sc::build_kernel(space);
  const int t = sc::tv_mixing_time(k, 0.01);
  // Delta is half the largest entry deviation, not half the L1 row distance.
  // Oracle: plain double powering of the 3x3 kernel.
  const std::size_t n = k.size();
  std::vector<double> pw(n * n, 0.0), a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = k.at(i / n, i % n).convert_to<double>();
  for (std::size_t i = 0; i < n; ++i) pw[i * n + i] = 1.0;
  int expect = 0;
  for (;; ++expect) {
    double worst = 0;
    for (double x : pw) worst = std::max(worst, 0.5 * std::abs(x - 1.0 / n));
    if (worst <= 0.01) break;
    std::vector<double> nx(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) nx[i * n + j] += pw[i * n + m] * a[m * n + j];
    pw = nx;
  }
  CHECK(expect == 9);  // (1/3)(2/3)^t <= 0.01 first at t = 9
  CHECK(t == expect);
  const double tau = sc::spectral_gap(k).tau_rel;
  CHECK(t <= 20 * tau * std::log(3 / 0.01));
}

TEST_CASE("congestion") {
  const auto two_space = sc::enumerate_states({{1, 1}, {1, 1}});
  const auto two = sc::congestion(two_space, sc::build_kernel(two_space));
  CHECK(two.kappa == 1);
  CHECK(two.path_count == 2);

  for (const auto& ds : {sc::BipartiteDegreeSequence({2, 2, 2}, {3, 2, 1}),
                         sc::BipartiteDegreeSequence({1, 1, 1}, {1, 1, 1}),
                         sc::BipartiteDegreeSequence({2, 2, 1, 1}, {2, 2, 1, 1})}) {
    const auto space = sc::enumerate_states(ds);
    const auto kernel = sc::build_kernel(space);
    sc::CongestionOptions opts;
    opts.certify = true;
    const auto c = sc::congestion(space, kernel, opts);
    CHECK(c.kappa > 0);
    CHECK(c.kappa_float >= sc::spectral_gap(kernel).tau_rel - 1e-8);
    CHECK(c.edge_a < c.edge_b);
    REQUIRE(c.max_switch_distance.has_value());
    CHECK(*c.max_switch_distance >= 0);
  }
  // Three states, all pairwise one swap apart: kappa = 2 (1/9) * 27 = 6.
  const auto s3 = sc::enumerate_states({{2, 2, 2}, {3, 2, 1}});
  CHECK(sc::congestion(s3, sc::build_kernel(s3)).kappa == 6);

  const auto big = sc::enumerate_states({{2, 2, 2, 2}, {2, 2, 2, 2}});
  sc::CongestionOptions small;
  small.max_states = 60;
  CHECK_THROWS_AS(sc::congestion(big, sc::build_kernel(big), small), sc::Error);
}
