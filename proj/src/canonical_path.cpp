#include "swapchain/canonical_path.hpp"

#include <map>
#include <string>

#include "swapchain/errors.hpp"
#include "swapchain/f_matrix.hpp"

namespace swapchain {

CanonicalPath canonical_path(const BipartiteGraph& x, const BipartiteGraph& y, const Pairing& s) {
  require_same_degrees(x, y);
  validate_pairing(x, y, s);
  CanonicalPath out;
  out.states.push_back(x);
  out.fixed_points.push_back(0);
  out.cycles = decompose(s).cycles;
  BipartiteGraph h = x;
  for (const AlternatingCycle& c : out.cycles) {
    BipartiteGraph next = h;
    for (std::size_t i = 0; i < c.ell(); ++i) {
      next.toggle_edge(c.main(i).u, c.main(i).v);
      next.toggle_edge(c.small(i).u, c.small(i).v);
    }
    CyclePath seg = path_along_cycle(h, next, x, y, c);
    out.swaps.insert(out.swaps.end(), seg.swaps.begin(), seg.swaps.end());
    out.states.insert(out.states.end(), seg.states.begin() + 1, seg.states.end());
    out.fixed_points.push_back(out.states.size() - 1);
    out.diagnostics.merge(seg.diagnostics);
    h = std::move(next);
  }
  if (!(out.states.back() == y)) {
    throw Error(ErrorCode::PairingMismatch, "cycle decomposition does not cover E(X ^ Y)");
  }
  return out;
}

std::vector<Certificate> certify(const BipartiteGraph& x, const BipartiteGraph& y,
                                 const CanonicalPath& path, SwitchDistanceOptions opts) {
  const std::vector<int> rows(x.row_degrees().begin(), x.row_degrees().end());
  const std::vector<int> cols(x.col_degrees().begin(), x.col_degrees().end());
  std::vector<Certificate> out;
  for (std::size_t i = 0; i < path.states.size(); ++i) {
    Certificate c;
    c.step = i;
    if (i > 0) c.swap = path.swaps[i - 1];
    c.switch_distance = switch_distance(hat_matrix(x, y, path.states[i]), rows, cols, opts);
    out.push_back(c);
  }
  return out;
}

std::vector<PathShare> path_distribution(const BipartiteGraph& x, const BipartiteGraph& y,
                                         std::size_t max_pairings) {
  const BigInt total = enumerate_pairings_count(x, y);
  if (total > max_pairings) {
    throw Error(ErrorCode::TooManyPairings,
                "t = " + total.str() + " pairings exceeds " + std::to_string(max_pairings));
  }
  std::map<std::vector<std::string>, std::pair<std::vector<BipartiteGraph>, BigInt>> counts;
  PairingEnumerator en(x, y);
  while (auto s = en.next()) {
    CanonicalPath p = canonical_path(x, y, *s);
    std::vector<std::string> key;
    for (const auto& g : p.states) key.push_back(g.key());
    auto [it, fresh] = counts.try_emplace(std::move(key), std::move(p.states), BigInt(0));
    it->second.second += 1;
  }
  std::vector<PathShare> out;
  for (auto& [_, v] : counts) {
    out.push_back({std::move(v.first), Rational(v.second, total)});
  }
  return out;
}

}  // namespace swapchain
