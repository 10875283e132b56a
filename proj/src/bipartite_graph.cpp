#include "swapchain/bipartite_graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "swapchain/errors.hpp"

namespace swapchain {

Swap Swap::inverse() const noexcept {
  Swap s = *this;
  s.before = before == Diagonal::Main ? Diagonal::Anti : Diagonal::Main;
  return s;
}

Swap Swap::removing(Edge a, Edge b) {
  if (a.u == b.u || a.v == b.v) {
    throw Error(ErrorCode::SwapNotAllowed, "swap edges must not share a vertex");
  }
  Swap s;
  s.u1 = std::min(a.u, b.u);
  s.u2 = std::max(a.u, b.u);
  s.v1 = std::min(a.v, b.v);
  s.v2 = std::max(a.v, b.v);
  // a and b sit on the main diagonal iff the smaller u pairs with the smaller v.
  const bool a_first = a.u < b.u;
  const Edge& lo = a_first ? a : b;
  s.before = lo.v == s.v1 ? Diagonal::Main : Diagonal::Anti;
  return s;
}

std::pair<Edge, Edge> Swap::removed() const noexcept {
  if (before == Diagonal::Main) return {{u1, v1}, {u2, v2}};
  return {{u1, v2}, {u2, v1}};
}

std::pair<Edge, Edge> Swap::added() const noexcept {
  return inverse().removed();
}

BipartiteGraph::BipartiteGraph(std::size_t k, std::size_t l)
    : k_(k), l_(l), adj_(k * l, 0), row_deg_(k, 0), col_deg_(l, 0) {}

BipartiteGraph BipartiteGraph::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t k = rows.size();
  const std::size_t l = k == 0 ? 0 : rows.front().size();
  BipartiteGraph g(k, l);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != l) {
      throw Error(ErrorCode::ShapeMismatch, "ragged biadjacency rows");
    }
    for (std::size_t j = 0; j < l; ++j) {
      const int x = rows[i][j];
      if (x != 0 && x != 1) {
        throw Error(ErrorCode::ParseError, "biadjacency entries must be 0 or 1");
      }
      if (x == 1) g.set_edge(static_cast<int>(i), static_cast<int>(j), true);
    }
  }
  return g;
}

void BipartiteGraph::set_edge(int u, int v, bool present) {
  auto& cell = adj_[static_cast<std::size_t>(u) * l_ + static_cast<std::size_t>(v)];
  const bool had = cell != 0;
  if (had == present) return;
  cell = present ? 1 : 0;
  const int delta = present ? 1 : -1;
  row_deg_[static_cast<std::size_t>(u)] += delta;
  col_deg_[static_cast<std::size_t>(v)] += delta;
}

std::size_t BipartiteGraph::edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1}));
}

bool BipartiteGraph::same_degrees(const BipartiteGraph& other) const noexcept {
  return k_ == other.k_ && l_ == other.l_ && row_deg_ == other.row_deg_ &&
         col_deg_ == other.col_deg_;
}

BipartiteDegreeSequence BipartiteGraph::degree_sequence() const {
  std::vector<int> a = row_deg_;
  std::vector<int> b = col_deg_;
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return BipartiteDegreeSequence(std::move(a), std::move(b));
}

std::string BipartiteGraph::key() const {
  std::string s(adj_.size(), '0');
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    if (adj_[i]) s[i] = '1';
  }
  return s;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < k_; ++u) {
    for (std::size_t v = 0; v < l_; ++v) {
      if (adj_[u * l_ + v]) out.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
  }
  return out;
}

bool is_allowed(const BipartiteGraph& g, const Swap& s) noexcept {
  if (s.u1 == s.u2 || s.v1 == s.v2) return false;
  if (s.u1 < 0 || s.v1 < 0 || static_cast<std::size_t>(s.u2) >= g.k() ||
      static_cast<std::size_t>(s.v2) >= g.l()) {
    return false;
  }
  const auto [r1, r2] = s.removed();
  const auto [a1, a2] = s.added();
  return g.has_edge(r1.u, r1.v) && g.has_edge(r2.u, r2.v) && !g.has_edge(a1.u, a1.v) &&
         !g.has_edge(a2.u, a2.v);
}

namespace {

template <class F>
void for_each_allowed(const BipartiteGraph& g, F&& f) {
  const int k = static_cast<int>(g.k());
  const int l = static_cast<int>(g.l());
  for (int u1 = 0; u1 < k; ++u1) {
    for (int u2 = u1 + 1; u2 < k; ++u2) {
      for (int v1 = 0; v1 < l; ++v1) {
        for (int v2 = v1 + 1; v2 < l; ++v2) {
          const bool a = g.has_edge(u1, v1);
          const bool b = g.has_edge(u1, v2);
          const bool c = g.has_edge(u2, v1);
          const bool d = g.has_edge(u2, v2);
          if (a && d && !b && !c) f(Swap{u1, u2, v1, v2, Diagonal::Main});
          else if (b && c && !a && !d) f(Swap{u1, u2, v1, v2, Diagonal::Anti});
        }
      }
    }
  }
}

}  // namespace

std::vector<Swap> allowed_swaps(const BipartiteGraph& g) {
  std::vector<Swap> out;
  for_each_allowed(g, [&](const Swap& s) { out.push_back(s); });
  return out;
}

std::size_t count_allowed_swaps(const BipartiteGraph& g) noexcept {
  std::size_t n = 0;
  for_each_allowed(g, [&](const Swap&) { ++n; });
  return n;
}

void apply_swap_in_place(BipartiteGraph& g, const Swap& s) {
  if (!is_allowed(g, s)) {
    throw Error(ErrorCode::SwapNotAllowed,
                "swap (" + std::to_string(s.u1) + " " + std::to_string(s.u2) + "; " +
                    std::to_string(s.v1) + " " + std::to_string(s.v2) +
                    ") is not allowed");
  }
  const auto [r1, r2] = s.removed();
  const auto [a1, a2] = s.added();
  g.set_edge(r1.u, r1.v, false);
  g.set_edge(r2.u, r2.v, false);
  g.set_edge(a1.u, a1.v, true);
  g.set_edge(a2.u, a2.v, true);
}

BipartiteGraph apply_swap(const BipartiteGraph& g, const Swap& s) {
  BipartiteGraph h = g;
  apply_swap_in_place(h, s);
  return h;
}

BipartiteGraph replay(const BipartiteGraph& start, std::span<const Swap> swaps) {
  BipartiteGraph g = start;
  for (const Swap& s : swaps) apply_swap_in_place(g, s);
  return g;
}

void require_same_degrees(const BipartiteGraph& x, const BipartiteGraph& y) {
  if (x.k() != y.k() || x.l() != y.l()) {
    throw Error(ErrorCode::ShapeMismatch, "graphs have different class sizes");
  }
  if (!x.same_degrees(y)) {
    throw Error(ErrorCode::DegreeMismatch, "graphs have different degree vectors");
  }
}

EdgePartition symmetric_difference(const BipartiteGraph& x, const BipartiteGraph& y) {
  require_same_degrees(x, y);
  EdgePartition p;
  for (int u = 0; u < static_cast<int>(x.k()); ++u) {
    for (int v = 0; v < static_cast<int>(x.l()); ++v) {
      const bool a = x.has_edge(u, v);
      const bool b = y.has_edge(u, v);
      if (a && !b) p.x_edges.push_back({u, v});
      if (b && !a) p.y_edges.push_back({u, v});
    }
  }
  return p;
}

bool one_swap_apart(const BipartiteGraph& g, const BipartiteGraph& h, Swap* out) {
  if (g.k() != h.k() || g.l() != h.l()) return false;
  std::vector<Edge> gone;
  std::vector<Edge> come;
  for (int u = 0; u < static_cast<int>(g.k()); ++u) {
    for (int v = 0; v < static_cast<int>(g.l()); ++v) {
      const bool a = g.has_edge(u, v);
      const bool b = h.has_edge(u, v);
      if (a && !b) gone.push_back({u, v});
      if (b && !a) come.push_back({u, v});
      if (gone.size() > 2 || come.size() > 2) return false;
    }
  }
  if (gone.size() != 2 || come.size() != 2) return false;
  if (gone[0].u == gone[1].u || gone[0].v == gone[1].v) return false;
  const Swap s = Swap::removing(gone[0], gone[1]);
  const auto [a1, a2] = s.added();
  const bool match = (a1 == come[0] && a2 == come[1]) || (a1 == come[1] && a2 == come[0]);
  if (!match) return false;
  if (out) *out = s;
  return true;
}

}  // namespace swapchain
