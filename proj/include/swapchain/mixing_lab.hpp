#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/degree_sequence.hpp"
#include "swapchain/rational.hpp"

namespace swapchain {

/// All realizations of a degree sequence, sorted by biadjacency key.
struct StateSpace {
  BipartiteDegreeSequence ds;
  std::vector<BipartiteGraph> states;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const noexcept { return states.size(); }
  std::size_t id(const BipartiteGraph& g) const { return index.at(g.key()); }
};

/// Breadth-first search from greedy_realize(ds) over allowed swaps.
/// Throws NotGraphical, or TooLarge past `max_states`.
StateSpace enumerate_states(const BipartiteDegreeSequence& ds, std::size_t max_states = 2000);

/// Exact N x N transition matrix, row = current state.
class TransitionMatrix {
 public:
  TransitionMatrix(std::size_t n, std::vector<Rational> entries, std::uint64_t proposals);

  std::size_t size() const noexcept { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return p_[i * n_ + j]; }
  /// C(k,2) C(l,2); every entry is a multiple of 1 / proposals().
  std::uint64_t proposals() const noexcept { return proposals_; }

  bool is_symmetric() const;
  bool rows_sum_to_one() const;
  /// uniform * P == uniform, exactly.
  bool uniform_is_stationary() const;
  /// All non-zero off-diagonal entries are 1 / proposals().
  bool off_diagonal_uniform() const;

 private:
  std::size_t n_;
  std::vector<Rational> p_;
  std::uint64_t proposals_;
};

/// Kernel from transition_prob; its invariants are checked on construction
/// (throws PreconditionViolation if one fails).
TransitionMatrix build_kernel(const StateSpace& space);

struct SpectralResult {
  std::vector<double> eigenvalues;  ///< descending, with multiplicity
  double lambda2 = 0;               ///< second-largest distinct eigenvalue
  double lambda_min = 0;
  double tau_rel = 0;
  double residual = 0;              ///< max ||P v - lambda v||
};

/// Dense symmetric eigensolve. Throws DegenerateChain when N < 2 or the
/// eigenvalue 1 is repeated. Throws TooLarge above `max_states`.
SpectralResult spectral_gap(const TransitionMatrix& p, std::size_t max_states = 2000);

/// Smallest t with max_x Delta_x(t') <= eps for all t' >= t, using exact
/// powers of the kernel. The scan stops once (1/2) lambda*^t <= eps, which
/// bounds every later Delta. Throws NonMixing when lambda* = 1.
int tv_mixing_time(const TransitionMatrix& p, double eps);

struct CongestionOptions {
  std::size_t max_states = 100;
  std::size_t max_pairings = 5000;
  /// Also compute hat-matrix switch distances along every path.
  bool certify = false;
  int switch_cap = 6;
};

struct CongestionResult {
  Rational kappa;
  double kappa_float = 0;
  /// Most congested edge (state ids, first < second).
  std::size_t edge_a = 0;
  std::size_t edge_b = 0;
  /// max_e sum of pi_xy(gamma) over paths through e.
  Rational max_edge_flow;
  std::size_t max_path_length = 0;
  std::size_t path_count = 0;
  /// Largest certified switch distance; -1 if any exceeded the cap,
  /// nullopt if not requested.
  std::optional<int> max_switch_distance;
};

/// Sinclair congestion of the canonical path system with uniform pi:
/// max over edges e of sum_{x != y, gamma through e} pi(x) pi(y) pi_xy(gamma)
/// * sum_{(w,z) in gamma} 1 / (T(z|w) pi(w)). Steps are counted with
/// multiplicity in the inner sum. Throws TooLarge / TooManyPairings.
CongestionResult congestion(const StateSpace& space, const TransitionMatrix& kernel,
                            CongestionOptions opts = {});

}  // namespace swapchain
