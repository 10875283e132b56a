#include "support.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

namespace oracle {

using swapchain::BipartiteDegreeSequence;
using swapchain::BipartiteGraph;

namespace {

bool non_increasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

BipartiteGraph from_mask(int k, int l, std::uint64_t mask) {
  BipartiteGraph g(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
  for (int i = 0; i < k * l; ++i) {
    if ((mask >> i) & 1U) g.set_edge(i / l, i % l, true);
  }
  return g;
}

void sequences(int len, int max, int left, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int x = std::min(max, left); x >= 0; --x) {
    cur.push_back(x);
    sequences(len, x, left, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::map<Margins, std::uint64_t> margin_counts(int k, int l) {
  std::map<Margins, std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << (k * l);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> rows(static_cast<std::size_t>(k), 0);
    std::vector<int> cols(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < k * l; ++i) {
      if ((mask >> i) & 1U) {
        ++rows[static_cast<std::size_t>(i / l)];
        ++cols[static_cast<std::size_t>(i % l)];
      }
    }
    if (non_increasing(rows) && non_increasing(cols)) ++out[{rows, cols}];
  }
  return out;
}

std::vector<BipartiteGraph> realizations(const BipartiteDegreeSequence& ds) {
  const int k = static_cast<int>(ds.k());
  const int l = static_cast<int>(ds.l());
  std::vector<BipartiteGraph> out;
  const std::uint64_t total = std::uint64_t{1} << (k * l);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> rows(static_cast<std::size_t>(k), 0);
    std::vector<int> cols(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < k * l; ++i) {
      if ((mask >> i) & 1U) {
        ++rows[static_cast<std::size_t>(i / l)];
        ++cols[static_cast<std::size_t>(i % l)];
      }
    }
    if (rows == ds.a() && cols == ds.b()) out.push_back(from_mask(k, l, mask));
  }
  return out;
}

std::vector<BipartiteDegreeSequence> all_sequences(int k, int l) {
  std::vector<std::vector<int>> as;
  std::vector<std::vector<int>> bs;
  std::vector<int> cur;
  sequences(k, l, l, cur, as);
  sequences(l, k, k, cur, bs);
  std::vector<BipartiteDegreeSequence> out;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      int sa = 0;
      int sb = 0;
      for (int x : a) sa += x;
      for (int x : b) sb += x;
      if (sa == sb) out.emplace_back(a, b);
    }
  }
  return out;
}

int submatrix_swap_count(const BipartiteGraph& g) {
  const int k = static_cast<int>(g.k());
  const int l = static_cast<int>(g.l());
  int n = 0;
  for (int u1 = 0; u1 < k; ++u1) {
    for (int u2 = u1 + 1; u2 < k; ++u2) {
      for (int v1 = 0; v1 < l; ++v1) {
        for (int v2 = v1 + 1; v2 < l; ++v2) {
          const bool a = g.has_edge(u1, v1);
          const bool b = g.has_edge(u1, v2);
          const bool c = g.has_edge(u2, v1);
          const bool d = g.has_edge(u2, v2);
          if ((a && d && !b && !c) || (b && c && !a && !d)) ++n;
        }
      }
    }
  }
  return n;
}

int bfs_distance(const BipartiteGraph& a, const BipartiteGraph& b) {
  std::unordered_map<std::string, int> dist{{a.key(), 0}};
  std::deque<BipartiteGraph> queue{a};
  const int k = static_cast<int>(a.k());
  const int l = static_cast<int>(a.l());
  while (!queue.empty()) {
    BipartiteGraph g = queue.front();
    queue.pop_front();
    const int d = dist[g.key()];
    if (g == b) return d;
    for (int u1 = 0; u1 < k; ++u1) {
      for (int u2 = u1 + 1; u2 < k; ++u2) {
        for (int v1 = 0; v1 < l; ++v1) {
          for (int v2 = v1 + 1; v2 < l; ++v2) {
            const bool e11 = g.has_edge(u1, v1);
            const bool e12 = g.has_edge(u1, v2);
            const bool e21 = g.has_edge(u2, v1);
            const bool e22 = g.has_edge(u2, v2);
            if (!((e11 && e22 && !e12 && !e21) || (e12 && e21 && !e11 && !e22))) continue;
            BipartiteGraph h = g;
            h.set_edge(u1, v1, !e11);
            h.set_edge(u1, v2, !e12);
            h.set_edge(u2, v1, !e21);
            h.set_edge(u2, v2, !e22);
            if (dist.emplace(h.key(), d + 1).second) queue.push_back(std::move(h));
          }
        }
      }
    }
  }
  return -1;
}

double chi_squared_uniform_p(const std::vector<std::uint64_t>& counts) {
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

std::vector<std::vector<int>> chord_table(const swapchain::FMatrix& f) {
  const int ell = f.ell;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(ell),
                                  std::vector<int>(static_cast<std::size_t>(ell), -1));
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      const int d = ((c - r) % ell + ell) % ell;
      if (d >= 2) {
        t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            f.cells.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) >= 2 ? 1 : 0;
      }
    }
  }
  return t;
}

std::optional<int> shortest_friendly_path(const std::vector<std::vector<int>>& types) {
  const int n = static_cast<int>(types.size());
  auto m = [n](int x) { return ((x % n) + n) % n; };
  auto type_at = [&](int r, int c) { return types[static_cast<std::size_t>(m(r))][static_cast<std::size_t>(m(c))]; };
  auto chord = [&](int r, int c) { return type_at(r, c) >= 0; };
  auto friendly = [&](int r, int c) {
    for (int rr : {c - 1, c}) {
      for (int cc : {r, r + 1}) {
        if (chord(rr, cc) && type_at(rr, cc) == type_at(r, c)) return true;
      }
    }
    return false;
  };
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
  std::optional<int> best;
  std::function<void(int, int, int)> dfs = [&](int r, int c, int len) {
    if (best && len >= *best) return;
    if (m(c - r) == 2) {
      best = len;
      return;
    }
    const int moves[4][2] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
    for (const auto& mv : moves) {
      const int nr = m(r + mv[0]);
      const int nc = m(c + mv[1]);
      if (!chord(nr, nc) || !friendly(nr, nc)) continue;
      auto& u = used[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)];
      if (u) continue;
      u = 1;
      dfs(nr, nc, len + 1);
      u = 0;
    }
  };
  for (int r = 0; r < n; ++r) {
    const int c = m(r - 1);
    if (n < 3 || !chord(r, c) || !friendly(r, c)) continue;
    used[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
    dfs(r, c, 1);
    used[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  }
  return best;
}

std::vector<int> random_chord_types(int ell, swapchain::Rng& rng) {
  std::vector<int> out;
  const auto family = rng.below(3);
  const double bias = rng.unit();
  std::vector<int> by_offset(static_cast<std::size_t>(ell), 0);
  for (auto& t : by_offset) t = rng.unit() < 0.5 ? 1 : 0;
  const double flip = family == 2 ? 0.1 : 0.0;
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      const int d = ((c - r) % ell + ell) % ell;
      if (d < 2) continue;
      int t = family == 0 ? (rng.unit() < bias ? 1 : 0) : by_offset[static_cast<std::size_t>(d)];
      if (rng.unit() < flip) t = 1 - t;
      out.push_back(t);
    }
  }
  return out;
}

CycleInstance random_cycle_instance(int ell, int extra, double density, int env_swaps,
                                    swapchain::Rng& rng) {
  const int n = ell + extra;
  std::vector<int> us(static_cast<std::size_t>(n));
  std::vector<int> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) us[static_cast<std::size_t>(i)] = vs[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(us[static_cast<std::size_t>(i)], us[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::swap(vs[static_cast<std::size_t>(i)], vs[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<swapchain::Edge> mains;
  std::vector<swapchain::Edge> smalls;
  std::set<std::pair<int, int>> cycle_cells;
  for (int i = 0; i < ell; ++i) {
    const int u = us[static_cast<std::size_t>(i)];
    mains.push_back({u, vs[static_cast<std::size_t>(i)]});
    smalls.push_back({u, vs[static_cast<std::size_t>((i + 1) % ell)]});
  }
  for (const auto& e : mains) cycle_cells.insert({e.u, e.v});
  for (const auto& e : smalls) cycle_cells.insert({e.u, e.v});

  BipartiteGraph g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!cycle_cells.count({u, v})) g.set_edge(u, v, rng.unit() < density);
    }
  }
  const auto types = random_chord_types(ell, rng);
  std::size_t next = 0;
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      const int d = ((c - r) % ell + ell) % ell;
      if (d < 2) continue;
      g.set_edge(us[static_cast<std::size_t>(r)], vs[static_cast<std::size_t>(c)], types[next++] != 0);
    }
  }
  for (const auto& e : mains) g.set_edge(e.u, e.v, true);
  BipartiteGraph g2 = g;
  for (const auto& e : mains) g2.set_edge(e.u, e.v, false);
  for (const auto& e : smalls) g2.set_edge(e.u, e.v, true);

  // Random swaps avoiding `forbidden` cells.
  auto wander = [&](BipartiteGraph h, const std::set<std::pair<int, int>>& forbidden) {
    for (int s = 0; s < env_swaps * 20 && env_swaps > 0; ++s) {
      const int u1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const int u2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const int v1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const int v2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (u1 == u2 || v1 == v2) continue;
      if (forbidden.count({u1, v1}) || forbidden.count({u1, v2}) || forbidden.count({u2, v1}) ||
          forbidden.count({u2, v2})) {
        continue;
      }
      if (h.has_edge(u1, v1) && h.has_edge(u2, v2) && !h.has_edge(u1, v2) && !h.has_edge(u2, v1)) {
        h.set_edge(u1, v1, false);
        h.set_edge(u2, v2, false);
        h.set_edge(u1, v2, true);
        h.set_edge(u2, v1, true);
      }
    }
    return h;
  };
  BipartiteGraph x = wander(g, cycle_cells);
  std::set<std::pair<int, int>> forbidden = cycle_cells;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (x.has_edge(u, v) != g.has_edge(u, v)) forbidden.insert({u, v});
    }
  }
  BipartiteGraph y = wander(g2, forbidden);
  auto cycle = swapchain::AlternatingCycle::from_edges(mains, smalls);
  return {std::move(g), std::move(g2), std::move(x), std::move(y), std::move(cycle)};
}

}  // namespace oracle
