#pragma once

#include <cstdint>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/degree_sequence.hpp"
#include "swapchain/random.hpp"
#include "swapchain/rational.hpp"

namespace swapchain {

/// Number of equally likely proposals per step: C(k,2) * C(l,2).
std::uint64_t proposal_count(std::size_t k, std::size_t l) noexcept;

/// One-step probability of moving from g to h. Throws on degree mismatch.
Rational transition_prob(const BipartiteGraph& g, const BipartiteGraph& h);

/// Proposal number `index` in [0, proposal_count): u1 < u2 and v1 < v2.
struct Proposal {
  int u1, u2, v1, v2;
};
Proposal unrank_proposal(std::uint64_t index, std::size_t k, std::size_t l) noexcept;

struct ChainState {
  BipartiteGraph graph;
  Rng rng;
};

/// One move of the chain: draw two U-vertices and two V-vertices uniformly,
/// swap if their submatrix is a 1-factor, otherwise stay. Returns true on a move.
bool step(ChainState& state);

/// greedy_realize(ds) followed by `steps` chain moves. Throws NotGraphical.
BipartiteGraph sample(const BipartiteDegreeSequence& ds, std::uint64_t steps,
                      std::uint64_t seed);

/// `count` independent samples; sample i uses derive_seed(seed, i).
std::vector<BipartiteGraph> sample_many(const BipartiteDegreeSequence& ds,
                                        std::uint64_t steps, std::uint64_t seed,
                                        std::size_t count);

}  // namespace swapchain
