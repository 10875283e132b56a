#include "swapchain/mixing_lab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include <Eigen/Dense>

#include "swapchain/canonical_path.hpp"
#include "swapchain/errors.hpp"
#include "swapchain/f_matrix.hpp"
#include "swapchain/realization.hpp"
#include "swapchain/swap_chain.hpp"
#include "swapchain/switch_distance.hpp"

namespace swapchain {

StateSpace enumerate_states(const BipartiteDegreeSequence& ds, std::size_t max_states) {
  const BipartiteGraph start = greedy_realize(ds);
  std::set<std::string> seen{start.key()};
  std::vector<BipartiteGraph> found{start};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const BipartiteGraph g = found[queue.front()];
    queue.pop_front();
    for (const Swap& s : allowed_swaps(g)) {
      BipartiteGraph h = apply_swap(g, s);
      if (!seen.insert(h.key()).second) continue;
      if (found.size() >= max_states) {
        throw Error(ErrorCode::TooLarge,
                    "more than " + std::to_string(max_states) + " realizations");
      }
      queue.push_back(found.size());
      found.push_back(std::move(h));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const BipartiteGraph& a, const BipartiteGraph& b) { return a.key() < b.key(); });
  StateSpace space{ds, std::move(found), {}};
  for (std::size_t i = 0; i < space.states.size(); ++i) space.index.emplace(space.states[i].key(), i);
  return space;
}

TransitionMatrix::TransitionMatrix(std::size_t n, std::vector<Rational> entries,
                                   std::uint64_t proposals)
    : n_(n), p_(std::move(entries)), proposals_(proposals) {
  if (p_.size() != n_ * n_) throw Error(ErrorCode::ShapeMismatch, "kernel must be square");
}

bool TransitionMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool TransitionMatrix::rows_sum_to_one() const {
  for (std::size_t i = 0; i < n_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += at(i, j);
    if (s != 1) return false;
  }
  return true;
}

bool TransitionMatrix::uniform_is_stationary() const {
  const Rational u(1, static_cast<long>(n_));
  for (std::size_t j = 0; j < n_; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += u * at(i, j);
    if (s != u) return false;
  }
  return true;
}

bool TransitionMatrix::off_diagonal_uniform() const {
  const Rational unit(BigInt(1), BigInt(proposals_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && at(i, j) != 0 && at(i, j) != unit) return false;
    }
  }
  return true;
}

TransitionMatrix build_kernel(const StateSpace& space) {
  const std::size_t n = space.size();
  std::vector<Rational> p(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p[i * n + j] = transition_prob(space.states[i], space.states[j]);
    }
  }
  const std::uint64_t proposals =
      n == 0 ? 1 : std::max<std::uint64_t>(1, proposal_count(space.states[0].k(), space.states[0].l()));
  TransitionMatrix t(n, std::move(p), proposals);
  if (!t.is_symmetric() || !t.rows_sum_to_one() || !t.off_diagonal_uniform()) {
    throw Error(ErrorCode::PreconditionViolation, "kernel invariants failed");
  }
  return t;
}

SpectralResult spectral_gap(const TransitionMatrix& p, std::size_t max_states) {
  const std::size_t n = p.size();
  if (n < 2) throw Error(ErrorCode::DegenerateChain, "a single state has no spectral gap");
  if (n > max_states) throw Error(ErrorCode::TooLarge, "too many states for a dense eigensolve");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p.at(i, j).convert_to<double>();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::DegenerateChain, "eigensolver did not converge");
  }
  SpectralResult r;
  const Eigen::VectorXd& vals = solver.eigenvalues();  // ascending
  for (Eigen::Index i = vals.size() - 1; i >= 0; --i) r.eigenvalues.push_back(vals(i));
  r.lambda_min = r.eigenvalues.back();
  const Eigen::MatrixXd resid = m * solver.eigenvectors() - solver.eigenvectors() * vals.asDiagonal();
  r.residual = resid.colwise().norm().maxCoeff();

  constexpr double tol = 1e-9;
  const double top = r.eigenvalues.front();
  if (r.eigenvalues[1] > top - tol) {
    throw Error(ErrorCode::DegenerateChain, "eigenvalue 1 is repeated: the chain is reducible");
  }
  r.lambda2 = r.eigenvalues[1];
  r.tau_rel = 1.0 / (1.0 - r.lambda2);
  return r;
}

int tv_mixing_time(const TransitionMatrix& p, double eps) {
  const std::size_t n = p.size();
  const BigInt nn(static_cast<unsigned long long>(n));
  const BigInt d(p.proposals());
  const Rational e(eps);
  // Delta never exceeds (1 - 1/N) / 2.
  if (e * 2 >= Rational(BigInt(n - 1), nn)) return 0;

  const SpectralResult spec = spectral_gap(p);
  const double lambda_star = std::max(std::abs(spec.lambda2), std::abs(spec.lambda_min));
  if (lambda_star >= 1.0 - 1e-12) {
    throw Error(ErrorCode::NonMixing, "the chain is periodic: |lambda| = 1 besides lambda_1");
  }
  const int horizon =
      static_cast<int>(std::ceil(std::log(2.0 * eps) / std::log(lambda_star))) + 2;

  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Rational& x = p.at(i / n, i % n);
    a[i] = numerator(x) * (d / denominator(x));
  }
  std::vector<BigInt> pw(n * n, 0);  // A^t
  for (std::size_t i = 0; i < n; ++i) pw[i * n + i] = 1;
  BigInt dt = 1;  // D^t
  int last_bad = -1;
  std::vector<BigInt> next(n * n);
  for (int t = 0; t <= horizon; ++t) {
    // Delta_x(t) > eps  <=>  |N A^t(y,x) - D^t| > 2 eps N D^t for some y.
    const Rational bound = e * 2 * Rational(nn * dt);
    bool bad = false;
    for (std::size_t i = 0; i < n * n && !bad; ++i) {
      BigInt diff = nn * pw[i] - dt;
      if (diff < 0) diff = -diff;
      if (Rational(diff) > bound) bad = true;
    }
    if (bad) last_bad = t;
    if (t == horizon) break;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t m = 0; m < n; ++m) {
          if (a[m * n + j] != 0) s += pw[i * n + m] * a[m * n + j];
        }
        next[i * n + j] = std::move(s);
      }
    }
    pw.swap(next);
    dt *= d;
  }
  return last_bad + 1;
}

CongestionResult congestion(const StateSpace& space, const TransitionMatrix& kernel,
                            CongestionOptions opts) {
  const std::size_t n = space.size();
  if (n > opts.max_states) {
    throw Error(ErrorCode::TooLarge, "congestion is limited to " +
                                         std::to_string(opts.max_states) + " states");
  }
  const Rational pi(1, static_cast<long>(n));
  std::map<std::pair<std::size_t, std::size_t>, Rational> load;
  std::map<std::pair<std::size_t, std::size_t>, Rational> flow;
  CongestionResult res;
  if (opts.certify) res.max_switch_distance = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  if (n > 0) {
    rows.assign(space.states[0].row_degrees().begin(), space.states[0].row_degrees().end());
    cols.assign(space.states[0].col_degrees().begin(), space.states[0].col_degrees().end());
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const BipartiteGraph& gx = space.states[x];
      const BipartiteGraph& gy = space.states[y];
      for (const PathShare& share : path_distribution(gx, gy, opts.max_pairings)) {
        ++res.path_count;
        std::vector<std::size_t> ids;
        for (const auto& g : share.states) ids.push_back(space.id(g));
        res.max_path_length = std::max(res.max_path_length, ids.size() - 1);
        Rational inner = 0;
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t s = 0; s + 1 < ids.size(); ++s) {
          inner += 1 / (kernel.at(ids[s], ids[s + 1]) * pi);
          edges.insert(std::minmax(ids[s], ids[s + 1]));
        }
        const Rational w = pi * pi * share.probability * inner;
        for (const auto& e : edges) {
          load[e] += w;
          flow[e] += share.probability;
        }
        if (opts.certify && *res.max_switch_distance >= 0) {
          for (const auto& z : share.states) {
            const auto dist = switch_distance(hat_matrix(gx, gy, z), rows, cols,
                                              {opts.switch_cap, 1});
            if (!dist) {
              res.max_switch_distance = -1;
              break;
            }
            res.max_switch_distance = std::max(*res.max_switch_distance, *dist);
          }
        }
      }
    }
  }
  for (const auto& [e, v] : load) {
    if (v > res.kappa) {
      res.kappa = v;
      res.edge_a = e.first;
      res.edge_b = e.second;
    }
  }
  for (const auto& [e, v] : flow) res.max_edge_flow = std::max(res.max_edge_flow, v);
  res.kappa_float = res.kappa.convert_to<double>();
  return res;
}

}  // namespace swapchain
