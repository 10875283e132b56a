#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swapchain/degree_sequence.hpp"

namespace swapchain {

/// An edge u–v with u in class U (row) and v in class V (column).
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Which diagonal of the 2x2 submatrix on (u1,u2; v1,v2) carries the edges.
enum class Diagonal : std::uint8_t {
  Main,  ///< u1v1 and u2v2
  Anti,  ///< u1v2 and u2v1
};

/// A swap on (u1, u2; v1, v2). Indices are canonical (u1 < u2, v1 < v2);
/// `before` records which diagonal holds the edges before the swap fires.
struct Swap {
  int u1 = 0;
  int u2 = 0;
  int v1 = 0;
  int v2 = 0;
  Diagonal before = Diagonal::Main;

  /// Same four vertices, reverse direction.
  Swap inverse() const noexcept;

  /// The swap removing edges `a` and `b` and adding (a.u, b.v), (b.u, a.v).
  static Swap removing(Edge a, Edge b);

  /// Edges present before the swap fires.
  std::pair<Edge, Edge> removed() const noexcept;
  /// Edges present after the swap fires.
  std::pair<Edge, Edge> added() const noexcept;

  bool touches(int u, int v) const noexcept {
    return (u == u1 || u == u2) && (v == v1 || v == v2);
  }

  friend bool operator==(const Swap&, const Swap&) = default;
};

/// Simple bipartite graph stored as a dense k x l biadjacency matrix, row i
/// is u_i and column j is v_j. Degree vectors are kept in sync with the
/// matrix on every mutation.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t k, std::size_t l);

  /// Builds from rows of 0/1 values; rows must have equal length.
  static BipartiteGraph from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t k() const noexcept { return k_; }
  std::size_t l() const noexcept { return l_; }

  bool has_edge(int u, int v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * l_ + static_cast<std::size_t>(v)] != 0;
  }
  void set_edge(int u, int v, bool present);
  void toggle_edge(int u, int v) { set_edge(u, v, !has_edge(u, v)); }

  int row_degree(int u) const noexcept { return row_deg_[static_cast<std::size_t>(u)]; }
  int col_degree(int v) const noexcept { return col_deg_[static_cast<std::size_t>(v)]; }
  std::span<const int> row_degrees() const noexcept { return row_deg_; }
  std::span<const int> col_degrees() const noexcept { return col_deg_; }
  std::size_t edge_count() const noexcept;

  /// Same shape and identical per-vertex degrees.
  bool same_degrees(const BipartiteGraph& other) const noexcept;

  /// Degree sequence with both lists sorted non-increasing.
  BipartiteDegreeSequence degree_sequence() const;

  /// Row-major '0'/'1' string; used as hash key and canonical sort key.
  std::string key() const;

  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.k_ == b.k_ && a.l_ == b.l_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t k_ = 0;
  std::size_t l_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> row_deg_;
  std::vector<int> col_deg_;
};

/// X-edges are E(X - Y), Y-edges are E(Y - X); both sorted.
struct EdgePartition {
  std::vector<Edge> x_edges;
  std::vector<Edge> y_edges;

  bool empty() const noexcept { return x_edges.empty() && y_edges.empty(); }
};

bool is_allowed(const BipartiteGraph& g, const Swap& s) noexcept;

/// Every allowed swap, ordered by (u1, u2, v1, v2).
std::vector<Swap> allowed_swaps(const BipartiteGraph& g);
std::size_t count_allowed_swaps(const BipartiteGraph& g) noexcept;

/// Throws SwapNotAllowed when the 2x2 submatrix is not the recorded 1-factor.
BipartiteGraph apply_swap(const BipartiteGraph& g, const Swap& s);
void apply_swap_in_place(BipartiteGraph& g, const Swap& s);

/// Replays `swaps` from `start`; throws on the first disallowed one.
BipartiteGraph replay(const BipartiteGraph& start, std::span<const Swap> swaps);

/// Throws ShapeMismatch or DegreeMismatch.
void require_same_degrees(const BipartiteGraph& x, const BipartiteGraph& y);

EdgePartition symmetric_difference(const BipartiteGraph& x, const BipartiteGraph& y);

/// The single swap turning g into h, if they are exactly one swap apart.
bool one_swap_apart(const BipartiteGraph& g, const BipartiteGraph& h, Swap* out = nullptr);

}  // namespace swapchain
