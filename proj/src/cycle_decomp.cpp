#include "swapchain/cycle_decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "swapchain/errors.hpp"
#include "swapchain/random.hpp"

namespace swapchain {

bool operator==(const Pairing& a, const Pairing& b) {
  if (a.vertices.size() != b.vertices.size()) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const auto& p = a.vertices[i];
    const auto& q = b.vertices[i];
    if (p.vertex != q.vertex || p.x_edges != q.x_edges || p.y_edges != q.y_edges ||
        p.perm != q.perm) {
      return false;
    }
  }
  return true;
}

std::vector<Edge> AlternatingCycle::main_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < ell(); ++i) out.push_back(main(i));
  return out;
}

std::vector<Edge> AlternatingCycle::small_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < ell(); ++i) out.push_back(small(i));
  return out;
}

AlternatingCycle AlternatingCycle::from_edges(const std::vector<Edge>& from_edges,
                                              const std::vector<Edge>& to_edges) {
  if (from_edges.size() != to_edges.size() || from_edges.size() < 2) {
    throw Error(ErrorCode::NonAlternating, "cycle sides must have equal size >= 2");
  }
  std::map<int, std::vector<Edge>> from_at_v;
  std::map<int, std::vector<Edge>> to_at_u;
  std::set<int> seen_u;
  std::set<int> seen_v;
  for (const Edge& e : from_edges) from_at_v[e.v].push_back(e);
  for (const Edge& e : to_edges) to_at_u[e.u].push_back(e);
  for (const auto& [_, es] : from_at_v) {
    if (es.size() != 1) throw Error(ErrorCode::NonAlternating, "vertex repeated in cycle");
  }
  for (const auto& [_, es] : to_at_u) {
    if (es.size() != 1) throw Error(ErrorCode::NonAlternating, "vertex repeated in cycle");
  }
  AlternatingCycle c;
  Edge cur = *std::min_element(from_edges.begin(), from_edges.end());
  const Edge start = cur;
  do {
    if (!seen_u.insert(cur.u).second || !seen_v.insert(cur.v).second) {
      throw Error(ErrorCode::NonAlternating, "cycle is not simple");
    }
    c.us.push_back(cur.u);
    c.vs.push_back(cur.v);
    auto to = to_at_u.find(cur.u);
    if (to == to_at_u.end()) throw Error(ErrorCode::NonAlternating, "open alternating walk");
    auto from = from_at_v.find(to->second.front().v);
    if (from == from_at_v.end()) throw Error(ErrorCode::NonAlternating, "open alternating walk");
    cur = from->second.front();
  } while (!(cur == start));
  if (c.ell() != from_edges.size()) {
    throw Error(ErrorCode::NonAlternating, "edge set is not a single cycle");
  }
  return c;
}

namespace {

std::vector<VertexPairing> identity_tables(const EdgePartition& p) {
  std::map<VertexRef, VertexPairing> at;
  auto add = [&](const Edge& e, bool is_x) {
    for (VertexRef r : {VertexRef{true, e.u}, VertexRef{false, e.v}}) {
      auto& vp = at[r];
      vp.vertex = r;
      (is_x ? vp.x_edges : vp.y_edges).push_back(e);
    }
  };
  for (const Edge& e : p.x_edges) add(e, true);
  for (const Edge& e : p.y_edges) add(e, false);
  std::vector<VertexPairing> out;
  for (auto& [_, vp] : at) {
    if (vp.x_edges.size() != vp.y_edges.size()) {
      throw Error(ErrorCode::DegreeMismatch, "unbalanced symmetric difference");
    }
    std::sort(vp.x_edges.begin(), vp.x_edges.end());
    std::sort(vp.y_edges.begin(), vp.y_edges.end());
    vp.perm.resize(vp.x_edges.size());
    std::iota(vp.perm.begin(), vp.perm.end(), 0);
    out.push_back(std::move(vp));
  }
  return out;
}

Pairing identity_pairing(const BipartiteGraph& x, const BipartiteGraph& y) {
  Pairing s;
  s.partition = symmetric_difference(x, y);
  s.vertices = identity_tables(s.partition);
  return s;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BigInt enumerate_pairings_count(const BipartiteGraph& x, const BipartiteGraph& y) {
  BigInt t = 1;
  for (const auto& vp : identity_pairing(x, y).vertices) t *= factorial(vp.perm.size());
  return t;
}

Pairing random_pairing(const BipartiteGraph& x, const BipartiteGraph& y, std::uint64_t seed) {
  Pairing s = identity_pairing(x, y);
  Rng rng(seed);
  for (auto& vp : s.vertices) {
    for (std::size_t i = vp.perm.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.below(i));
      std::swap(vp.perm[i - 1], vp.perm[j]);
    }
  }
  return s;
}

PairingEnumerator::PairingEnumerator(const BipartiteGraph& x, const BipartiteGraph& y)
    : current_(identity_pairing(x, y)) {}

std::optional<Pairing> PairingEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;
  }
  for (auto it = current_.vertices.rbegin(); it != current_.vertices.rend(); ++it) {
    if (std::next_permutation(it->perm.begin(), it->perm.end())) return current_;
    // next_permutation wrapped this digit back to identity; carry.
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Pairing> all_pairings(const BipartiteGraph& x, const BipartiteGraph& y) {
  std::vector<Pairing> out;
  PairingEnumerator en(x, y);
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

Pairing pairing_at(const BipartiteGraph& x, const BipartiteGraph& y, const BigInt& index) {
  Pairing s = identity_pairing(x, y);
  BigInt total = 1;
  for (const auto& vp : s.vertices) total *= factorial(vp.perm.size());
  if (index < 0 || index >= total) {
    throw Error(ErrorCode::PairingMismatch, "pairing index out of range");
  }
  BigInt rest = index;
  for (auto it = s.vertices.rbegin(); it != s.vertices.rend(); ++it) {
    const std::size_t d = it->perm.size();
    const BigInt radix = factorial(d);
    BigInt digit = rest % radix;
    rest /= radix;
    // Lehmer decode of `digit` into the lexicographic permutation.
    std::vector<int> pool(d);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < d; ++i) {
      const BigInt f = factorial(d - 1 - i);
      const auto q = static_cast<std::size_t>(BigInt(digit / f));
      digit %= f;
      it->perm[i] = pool[q];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
    }
  }
  return s;
}

void validate_pairing(const BipartiteGraph& x, const BipartiteGraph& y, const Pairing& s) {
  const Pairing ref = identity_pairing(x, y);
  if (s.partition.x_edges != ref.partition.x_edges ||
      s.partition.y_edges != ref.partition.y_edges ||
      s.vertices.size() != ref.vertices.size()) {
    throw Error(ErrorCode::PairingMismatch, "pairing does not belong to (X, Y)");
  }
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    const auto& a = s.vertices[i];
    const auto& b = ref.vertices[i];
    if (a.vertex != b.vertex || a.x_edges != b.x_edges || a.y_edges != b.y_edges) {
      throw Error(ErrorCode::PairingMismatch, "pairing tables do not match (X, Y)");
    }
    std::vector<int> p = a.perm;
    std::sort(p.begin(), p.end());
    if (p != b.perm) throw Error(ErrorCode::PairingMismatch, "pairing table is not a bijection");
  }
}

namespace {

struct Lookup {
  std::map<VertexRef, const VertexPairing*> by_vertex;

  explicit Lookup(const Pairing& s) {
    for (const auto& vp : s.vertices) by_vertex[vp.vertex] = &vp;
  }

  Edge x_to_y(VertexRef at, const Edge& e) const {
    const VertexPairing& vp = *by_vertex.at(at);
    const auto i = std::lower_bound(vp.x_edges.begin(), vp.x_edges.end(), e) - vp.x_edges.begin();
    return vp.y_edges[static_cast<std::size_t>(vp.perm[static_cast<std::size_t>(i)])];
  }

  Edge y_to_x(VertexRef at, const Edge& e) const {
    const VertexPairing& vp = *by_vertex.at(at);
    const auto j = std::lower_bound(vp.y_edges.begin(), vp.y_edges.end(), e) - vp.y_edges.begin();
    const auto i = std::find(vp.perm.begin(), vp.perm.end(), static_cast<int>(j)) - vp.perm.begin();
    return vp.x_edges[static_cast<std::size_t>(i)];
  }
};

}  // namespace

std::vector<Circuit> circuits_of(const Pairing& s) {
  const Lookup look(s);
  std::set<Edge> unused(s.partition.x_edges.begin(), s.partition.x_edges.end());
  std::vector<Circuit> out;
  while (!unused.empty()) {
    Circuit c;
    const Edge start = *unused.begin();
    Edge x = start;
    for (;;) {
      unused.erase(x);
      c.edges.push_back(x);
      const Edge y = look.x_to_y({true, x.u}, x);
      c.edges.push_back(y);
      x = look.y_to_x({false, y.v}, y);
      if (x == start) break;
      if (!unused.count(x)) {
        throw Error(ErrorCode::NonAlternating, "pairing walk revisited an edge");
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<AlternatingCycle> cycles_of(const Circuit& c) {
  const std::size_t m = c.edges.size();
  if (m == 0 || m % 2 != 0) throw Error(ErrorCode::NonAlternating, "circuit has odd length");
  // Vertex w_i is where edge i starts: V end for even (X) edges, U end for odd.
  auto start_vertex = [&](std::size_t i) {
    const Edge& e = c.edges[i];
    return i % 2 == 0 ? VertexRef{false, e.v} : VertexRef{true, e.u};
  };
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = c.edges[i];
    const Edge& f = c.edges[(i + 1) % m];
    const bool joined = i % 2 == 0 ? e.u == f.u : e.v == f.v;
    if (!joined) throw Error(ErrorCode::NonAlternating, "circuit edges do not chain");
  }
  const std::size_t first = static_cast<std::size_t>(
      std::min_element(c.edges.begin(), c.edges.end()) - c.edges.begin());

  struct Item {
    VertexRef vertex;
    std::size_t edge;  // index of the edge leaving `vertex`
  };
  std::vector<Item> stack;
  std::map<VertexRef, std::size_t> depth;
  std::vector<AlternatingCycle> out;
  auto close = [&](std::size_t from) {
    std::vector<Edge> xs;
    std::vector<Edge> ys;
    for (std::size_t t = from; t < stack.size(); ++t) {
      (stack[t].edge % 2 == 0 ? xs : ys).push_back(c.edges[stack[t].edge]);
      depth.erase(stack[t].vertex);
    }
    stack.resize(from);
    out.push_back(AlternatingCycle::from_edges(xs, ys));
  };
  for (std::size_t step = 0; step <= m; ++step) {
    const std::size_t i = (first + step) % m;
    const VertexRef w = start_vertex(i);
    if (auto it = depth.find(w); it != depth.end()) close(it->second);
    if (step == m) break;
    depth[w] = stack.size();
    stack.push_back({w, i});
  }
  if (!stack.empty()) throw Error(ErrorCode::NonAlternating, "circuit is not closed");
  return out;
}

CircuitDecomposition decompose(const Pairing& s) {
  CircuitDecomposition d;
  d.circuits = circuits_of(s);
  for (const Circuit& c : d.circuits) {
    for (auto& cyc : cycles_of(c)) d.cycles.push_back(std::move(cyc));
  }
  return d;
}

std::string format_circuit(const Circuit& c) {
  std::string out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = c.edges[i];
    if (i) out += ' ';
    out += i % 2 == 0 ? "v" + std::to_string(e.v) : "u" + std::to_string(e.u);
  }
  return out;
}

std::string format_cycle(const AlternatingCycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.ell(); ++i) {
    if (i) out += ' ';
    out += "v" + std::to_string(c.vs[i]) + " u" + std::to_string(c.us[i]);
  }
  return out;
}

}  // namespace swapchain
