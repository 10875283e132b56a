#include "swapchain/swap_chain.hpp"

#include "swapchain/errors.hpp"
#include "swapchain/realization.hpp"

namespace swapchain {

namespace {

std::uint64_t choose2(std::size_t n) noexcept {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Unordered pair number `idx` in colex order: (0,1), (0,2), (1,2), (0,3), ...
std::pair<int, int> unrank_pair(std::uint64_t idx) noexcept {
  std::uint64_t hi = 1;
  while (hi * (hi + 1) / 2 <= idx) ++hi;
  const std::uint64_t lo = idx - hi * (hi - 1) / 2;
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

}  // namespace

std::uint64_t proposal_count(std::size_t k, std::size_t l) noexcept {
  return choose2(k) * choose2(l);
}

Proposal unrank_proposal(std::uint64_t index, std::size_t k, std::size_t l) noexcept {
  (void)k;
  const std::uint64_t per_u = choose2(l);
  const auto [u1, u2] = unrank_pair(index / per_u);
  const auto [v1, v2] = unrank_pair(index % per_u);
  return {u1, u2, v1, v2};
}

Rational transition_prob(const BipartiteGraph& g, const BipartiteGraph& h) {
  require_same_degrees(g, h);
  const std::uint64_t total = proposal_count(g.k(), g.l());
  if (g == h) {
    if (total == 0) return Rational(1);
    const auto allowed = static_cast<std::uint64_t>(count_allowed_swaps(g));
    return Rational(1) - Rational(BigInt(allowed), BigInt(total));
  }
  if (one_swap_apart(g, h)) return Rational(BigInt(1), BigInt(total));
  return Rational(0);
}

bool step(ChainState& state) {
  const std::uint64_t total = proposal_count(state.graph.k(), state.graph.l());
  if (total == 0) return false;
  const Proposal p = unrank_proposal(state.rng.below(total), state.graph.k(), state.graph.l());
  const BipartiteGraph& g = state.graph;
  Swap s{p.u1, p.u2, p.v1, p.v2, Diagonal::Main};
  if (!is_allowed(g, s)) {
    s.before = Diagonal::Anti;
    if (!is_allowed(g, s)) return false;
  }
  apply_swap_in_place(state.graph, s);
  return true;
}

BipartiteGraph sample(const BipartiteDegreeSequence& ds, std::uint64_t steps,
                      std::uint64_t seed) {
  ChainState st{greedy_realize(ds), Rng(seed)};
  for (std::uint64_t i = 0; i < steps; ++i) step(st);
  return st.graph;
}

std::vector<BipartiteGraph> sample_many(const BipartiteDegreeSequence& ds,
                                        std::uint64_t steps, std::uint64_t seed,
                                        std::size_t count) {
  std::vector<BipartiteGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(sample(ds, steps, derive_seed(seed, i)));
  }
  return out;
}

}  // namespace swapchain
