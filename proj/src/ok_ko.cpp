#include "swapchain/ok_ko.hpp"

#include <algorithm>
#include <set>

#include "swapchain/errors.hpp"
#include "swapchain/ryser.hpp"

namespace swapchain {

std::string_view spec_kind_name(SpecKind k) noexcept {
  switch (k) {
    case SpecKind::Initial: return "initial";
    case SpecKind::OK: return "OK";
    case SpecKind::KO: return "KO";
    case SpecKind::Final: return "final";
  }
  return "?";
}

std::vector<int> flipped_edges(const OKKOSpec& spec, int ell) {
  const int n = 2 * ell;
  std::vector<int> out;
  auto run = [&](int from, int to) {
    for (int e = mod(from, n);; e = mod(e + 1, n)) {
      out.push_back(e);
      if (e == mod(to, n)) break;
    }
  };
  switch (spec.kind) {
    case SpecKind::Initial:
      break;
    case SpecKind::Final:
      for (int e = 0; e < n; ++e) out.push_back(e);
      break;
    case SpecKind::OK:
      run(2 * spec.anchor.r + 1, 2 * spec.anchor.c - 1);
      break;
    case SpecKind::KO:
      run(2 * spec.anchor.c, 2 * spec.anchor.r);
      break;
  }
  return out;
}

Edge cycle_edge(const AlternatingCycle& cycle, int e) {
  const auto i = static_cast<std::size_t>(e / 2);
  return e % 2 == 0 ? cycle.main(i) : cycle.small(i);
}

BipartiteGraph pattern_state(const BipartiteGraph& g, const AlternatingCycle& cycle,
                             const OKKOSpec& spec) {
  const int ell = static_cast<int>(cycle.ell());
  BipartiteGraph z = g;
  if (spec.kind == SpecKind::OK || spec.kind == SpecKind::KO) {
    if (!is_chord(spec.anchor, ell)) {
      throw Error(ErrorCode::SpecViolation, "OK/KO anchor must be a chord");
    }
    const int u = cycle.us[static_cast<std::size_t>(spec.anchor.r)];
    const int v = cycle.vs[static_cast<std::size_t>(spec.anchor.c)];
    const bool type1 = g.has_edge(u, v);
    if ((spec.kind == SpecKind::OK) != type1) {
      throw Error(ErrorCode::SpecViolation,
                  spec.kind == SpecKind::OK ? "OK anchor must be a type-1 chord"
                                            : "KO anchor must be a type-0 chord");
    }
    z.set_edge(u, v, !type1);
  }
  for (int e : flipped_edges(spec, ell)) {
    const Edge edge = cycle_edge(cycle, e);
    z.toggle_edge(edge.u, edge.v);
  }
  return z;
}

std::vector<Swap> local_ryser(const BipartiteGraph& a, const BipartiteGraph& b) {
  const EdgePartition d = symmetric_difference(a, b);
  std::set<int> rows;
  std::set<int> cols;
  for (const auto* es : {&d.x_edges, &d.y_edges}) {
    for (const Edge& e : *es) {
      rows.insert(e.u);
      cols.insert(e.v);
    }
  }
  const std::vector<int> rmap(rows.begin(), rows.end());
  const std::vector<int> cmap(cols.begin(), cols.end());
  auto sub = [&](const BipartiteGraph& g) {
    BipartiteGraph h(rmap.size(), cmap.size());
    for (std::size_t i = 0; i < rmap.size(); ++i) {
      for (std::size_t j = 0; j < cmap.size(); ++j) {
        if (g.has_edge(rmap[i], cmap[j])) h.set_edge(static_cast<int>(i), static_cast<int>(j), true);
      }
    }
    return h;
  };
  std::vector<Swap> out;
  for (const Swap& s : ryser_sequence(sub(a), sub(b))) {
    const auto [e1, e2] = s.removed();
    out.push_back(Swap::removing({rmap[static_cast<std::size_t>(e1.u)], cmap[static_cast<std::size_t>(e1.v)]},
                                 {rmap[static_cast<std::size_t>(e2.u)], cmap[static_cast<std::size_t>(e2.v)]}));
  }
  return out;
}

OkKoStep ok_ko_step(const BipartiteGraph& g, const AlternatingCycle& cycle,
                    const BipartiteGraph& l_prev, const OKKOSpec& prev, const OKKOSpec& next) {
  if (!(pattern_state(g, cycle, prev) == l_prev)) {
    throw Error(ErrorCode::SpecViolation, "current realization does not match the previous spec");
  }
  OkKoStep step;
  if (prev == next) return step;
  const BipartiteGraph target = pattern_state(g, cycle, next);
  const EdgePartition d = symmetric_difference(l_prev, target);
  try {
    (void)AlternatingCycle::from_edges(d.x_edges, d.y_edges);
  } catch (const Error&) {
    throw Error(ErrorCode::SpecViolation, "consecutive patterns differ by more than one cycle");
  }
  step.diff_length = static_cast<int>(d.x_edges.size() + d.y_edges.size());
  step.swaps = local_ryser(l_prev, target);
  return step;
}

}  // namespace swapchain
