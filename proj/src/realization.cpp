#include "swapchain/realization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "swapchain/errors.hpp"

namespace swapchain {

namespace {

// U-vertices ordered by (degree desc, index asc).
std::vector<int> by_degree(const std::vector<int>& deg) {
  std::vector<int> order(deg.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return deg[static_cast<std::size_t>(x)] >
                                              deg[static_cast<std::size_t>(y)]; });
  return order;
}

std::vector<int> active_row_degrees(const BipartiteGraph& g, std::span<const char> active) {
  std::vector<int> deg(g.k(), 0);
  for (int u = 0; u < static_cast<int>(g.k()); ++u) {
    if (active.empty()) {
      deg[static_cast<std::size_t>(u)] = g.row_degree(u);
      continue;
    }
    int d = 0;
    for (int v = 0; v < static_cast<int>(g.l()); ++v) {
      if (active[static_cast<std::size_t>(v)] && g.has_edge(u, v)) ++d;
    }
    deg[static_cast<std::size_t>(u)] = d;
  }
  return deg;
}

}  // namespace

BipartiteGraph greedy_realize(const BipartiteDegreeSequence& ds) {
  if (!ds.sums_agree()) {
    throw Error(ErrorCode::NotGraphical, "degree sums differ");
  }
  BipartiteGraph g(ds.k(), ds.l());
  std::vector<int> residual = ds.a();
  for (std::size_t v = 0; v < ds.l(); ++v) {
    const int need = ds.b()[v];
    const std::vector<int> order = by_degree(residual);
    for (int t = 0; t < need; ++t) {
      const int u = order[static_cast<std::size_t>(t)];
      if (residual[static_cast<std::size_t>(u)] == 0) {
        throw Error(ErrorCode::NotGraphical,
                    "greedy realization stuck at column " + std::to_string(v));
      }
      --residual[static_cast<std::size_t>(u)];
      g.set_edge(u, static_cast<int>(v), true);
    }
  }
  return g;
}

bool is_graphical(const BipartiteDegreeSequence& ds) {
  try {
    greedy_realize(ds);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGraphical) throw;
    return false;
  }
}

std::vector<int> push_up_target(const BipartiteGraph& g, int v, std::span<const char> active) {
  const std::vector<int> order = by_degree(active_row_degrees(g, active));
  std::vector<int> target(order.begin(), order.begin() + g.col_degree(v));
  std::sort(target.begin(), target.end());
  return target;
}

PushUpResult push_up(const BipartiteGraph& g, int v, std::span<const char> active) {
  PushUpResult res{g, {}};
  BipartiteGraph& h = res.graph;
  const std::vector<int> target = push_up_target(g, v, active);
  std::vector<char> in_target(g.k(), 0);
  for (int u : target) in_target[static_cast<std::size_t>(u)] = 1;

  auto is_active = [&](int c) {
    return active.empty() || active[static_cast<std::size_t>(c)] != 0;
  };

  for (;;) {
    int u = -1;
    int u_out = -1;
    for (int x = 0; x < static_cast<int>(h.k()); ++x) {
      const bool adj = h.has_edge(x, v);
      if (in_target[static_cast<std::size_t>(x)] && !adj && u < 0) u = x;
      if (!in_target[static_cast<std::size_t>(x)] && adj && u_out < 0) u_out = x;
    }
    if (u < 0) break;
    int witness = -1;
    for (int c = 0; c < static_cast<int>(h.l()); ++c) {
      if (c == v || !is_active(c)) continue;
      if (h.has_edge(u, c) && !h.has_edge(u_out, c)) {
        witness = c;
        break;
      }
    }
    if (witness < 0) {
      // Cannot happen when u outranks u_out by degree.
      throw Error(ErrorCode::PreconditionViolation, "push_up found no witness column");
    }
    const Swap s = Swap::removing({u, witness}, {u_out, v});
    apply_swap_in_place(h, s);
    res.swaps.push_back(s);
  }
  return res;
}

}  // namespace swapchain
