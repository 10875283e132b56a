#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swapchain/bipartite_graph.hpp"
#include "swapchain/rational.hpp"

namespace swapchain {

/// A vertex of either class.
struct VertexRef {
  bool is_u = true;
  int index = 0;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Bijection at one vertex between its incident X-edges and Y-edges.
/// x_edges and y_edges are sorted; x_edges[i] is paired with y_edges[perm[i]].
struct VertexPairing {
  VertexRef vertex;
  std::vector<Edge> x_edges;
  std::vector<Edge> y_edges;
  std::vector<int> perm;
};

/// A pairing s in S(X,Y): one bijection per vertex of positive
/// symmetric-difference degree, U-vertices first, each class by index.
struct Pairing {
  EdgePartition partition;
  std::vector<VertexPairing> vertices;

  friend bool operator==(const Pairing& a, const Pairing& b);
};

/// Closed walk alternating X-edge, Y-edge, ... ; edges[0] is an X-edge
/// traversed from its V end to its U end.
struct Circuit {
  std::vector<Edge> edges;
};

/// Simple alternating cycle u_0, v_0, ..., u_{l-1}, v_{l-1}.
///
/// main(i) = (u_i, v_i) are the edges of the "from" side and
/// small(i) = (u_i, v_{i+1 mod l}) those of the "to" side. The walk-around
/// starts at the smallest main edge and leaves it through u_0.
struct AlternatingCycle {
  std::vector<int> us;
  std::vector<int> vs;

  std::size_t ell() const noexcept { return us.size(); }
  Edge main(std::size_t i) const { return {us[i], vs[i]}; }
  Edge small(std::size_t i) const { return {us[i], vs[(i + 1) % vs.size()]}; }

  std::vector<Edge> main_edges() const;
  std::vector<Edge> small_edges() const;

  /// Normalized cycle from a simple closed alternating edge set.
  /// `from_edges` become the mains. Throws NonAlternating.
  static AlternatingCycle from_edges(const std::vector<Edge>& from_edges,
                                     const std::vector<Edge>& to_edges);

  friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
};

struct CircuitDecomposition {
  std::vector<Circuit> circuits;
  std::vector<AlternatingCycle> cycles;
};

/// t = prod d_i! over vertices with symmetric-difference degree 2 d_i.
BigInt enumerate_pairings_count(const BipartiteGraph& x, const BipartiteGraph& y);

/// Each vertex gets an independent uniform bijection.
Pairing random_pairing(const BipartiteGraph& x, const BipartiteGraph& y, std::uint64_t seed);

/// Lexicographic enumeration of S(X,Y); the last vertex varies fastest.
class PairingEnumerator {
 public:
  PairingEnumerator(const BipartiteGraph& x, const BipartiteGraph& y);
  std::optional<Pairing> next();

 private:
  Pairing current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Pairing> all_pairings(const BipartiteGraph& x, const BipartiteGraph& y);

/// The pairing at position `index` of the lexicographic order.
Pairing pairing_at(const BipartiteGraph& x, const BipartiteGraph& y, const BigInt& index);

/// Throws PairingMismatch unless `s` is a valid pairing of E(X ^ Y).
void validate_pairing(const BipartiteGraph& x, const BipartiteGraph& y, const Pairing& s);

std::vector<Circuit> circuits_of(const Pairing& s);

/// Splits a circuit at the first repeated vertex, starting from its smallest edge.
std::vector<AlternatingCycle> cycles_of(const Circuit& c);

CircuitDecomposition decompose(const Pairing& s);

/// "v0 u1 v2 ..." rendering of a circuit walk.
std::string format_circuit(const Circuit& c);
/// "v u v u ..." rendering of a cycle's walk-around: v_0 u_0 v_1 u_1 ...
std::string format_cycle(const AlternatingCycle& c);

}  // namespace swapchain
