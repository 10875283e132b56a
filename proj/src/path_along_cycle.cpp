#include "swapchain/path_along_cycle.hpp"

#include <algorithm>
#include <set>
#include <variant>

#include "swapchain/errors.hpp"
#include "swapchain/f_matrix.hpp"
#include "swapchain/friendly_path.hpp"

namespace swapchain {

void CycleDiagnostics::merge(const CycleDiagnostics& o) {
  friendly_cycles += o.friendly_cycles;
  split_cycles += o.split_cycles;
  direct_swaps += o.direct_swaps;
  length_one_paths += o.length_one_paths;
  max_depth = std::max(max_depth, o.max_depth);
  for (const auto& [k, v] : o.split_cases) split_cases[k] += v;
  same_state_checked += o.same_state_checked;
  same_state_failed += o.same_state_failed;
  van_friendly_checked += o.van_friendly_checked;
  van_friendly_failed += o.van_friendly_failed;
  fine_tune_interleaved += o.fine_tune_interleaved;
  fine_tune_sequential += o.fine_tune_sequential;
  ok_ko_steps.insert(ok_ko_steps.end(), o.ok_ko_steps.begin(), o.ok_ko_steps.end());
}

namespace {

BipartiteGraph flipped(const BipartiteGraph& z, const AlternatingCycle& cycle) {
  BipartiteGraph out = z;
  for (std::size_t i = 0; i < cycle.ell(); ++i) {
    out.toggle_edge(cycle.main(i).u, cycle.main(i).v);
    out.toggle_edge(cycle.small(i).u, cycle.small(i).v);
  }
  return out;
}

void require_cycle_state(const BipartiteGraph& z, const AlternatingCycle& cycle) {
  for (std::size_t i = 0; i < cycle.ell(); ++i) {
    if (!z.has_edge(cycle.main(i).u, cycle.main(i).v) ||
        z.has_edge(cycle.small(i).u, cycle.small(i).v)) {
      throw Error(ErrorCode::PreconditionViolation,
                  "cycle mains must be present and smalls absent");
    }
  }
}

std::vector<Swap> walk_friendly_path(const BipartiteGraph& z, const AlternatingCycle& cycle,
                                     const FMatrix& f, const FriendlyPath& path,
                                     CycleDiagnostics& diag) {
  const int ell = f.ell;
  const std::vector<Pos> adjusted = adjusted_positions(path, f);
  std::vector<OKKOSpec> specs{{SpecKind::Initial, {}}};
  for (std::size_t i = 0; i < path.positions.size(); ++i) {
    const bool type1 = f.type(path.positions[i]) == 1;
    specs.push_back({type1 ? SpecKind::OK : SpecKind::KO, adjusted[i]});
  }
  specs.push_back({SpecKind::Final, {}});

  std::vector<Swap> out;
  BipartiteGraph cur = z;
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    const OkKoStep step = ok_ko_step(z, cycle, cur, specs[i], specs[i + 1]);
    OkKoRecord rec;
    rec.from = specs[i].kind;
    rec.to = specs[i + 1].kind;
    rec.swaps = static_cast<int>(step.swaps.size());
    rec.diff_length = step.diff_length;
    const bool anchored = (rec.from == SpecKind::OK || rec.from == SpecKind::KO) &&
                          (rec.to == SpecKind::OK || rec.to == SpecKind::KO);
    rec.anchor_distance = anchored ? rook_distance(specs[i].anchor, specs[i + 1].anchor, ell) : 0;
    diag.ok_ko_steps.push_back(rec);
    for (const Swap& s : step.swaps) apply_swap_in_place(cur, s);
    out.insert(out.end(), step.swaps.begin(), step.swaps.end());
  }
  return out;
}

struct SplitChoice {
  Pos chord{};
  std::string tag;
  bool second_possibility = false;
};

// Same-state pattern at row i: D_m = (i+m, i-m), U_m = (i-m, i+m).
std::optional<SplitChoice> same_state_split(const FMatrix& f, int i) {
  const int ell = f.ell;
  const std::vector<Pos> down = down_line(i, ell);
  const std::vector<Pos> up = up_line(i, ell);
  if (down.empty() || up.empty()) return std::nullopt;
  const int t = f.type(down.front());
  std::size_t run = 0;
  while (run < down.size() && f.type(down[run]) == t) ++run;
  std::size_t jp = 0;
  for (std::size_t m = 0; m < up.size(); ++m) {
    if (f.type(up[m]) == t) {
      jp = m + 1;
      break;
    }
  }
  if (jp == 0 || jp > run + 1) return std::nullopt;
  const std::size_t j = std::min(jp, run);
  SplitChoice choice;
  choice.chord = t == 0 ? down[j - 1] : up[jp - 1];
  choice.second_possibility = jp >= 2;
  choice.tag = std::string(jp == 1 ? "J1" : "J2") + "_T" + std::to_string(t);
  return choice;
}

std::vector<Swap> interleave(const BipartiteGraph& z, const std::vector<Swap>& s1,
                             const std::vector<Swap>& s2, Edge p, CycleDiagnostics& diag) {
  std::vector<Swap> seq = s1;
  seq.insert(seq.end(), s2.begin(), s2.end());
  const auto touches = [&](const Swap& s) { return s.touches(p.u, p.v); };
  const std::size_t k1 =
      static_cast<std::size_t>(std::find_if(s1.begin(), s1.end(), touches) - s1.begin());
  if (k1 == s1.size()) {
    ++diag.fine_tune_sequential;
    return seq;
  }
  BipartiteGraph cur = z;
  std::vector<Swap> out(s1.begin(), s1.begin() + static_cast<std::ptrdiff_t>(k1));
  for (const Swap& s : out) apply_swap_in_place(cur, s);
  std::size_t k2 = 0;
  while (k2 < s2.size() && !touches(s2[k2]) && is_allowed(cur, s2[k2])) {
    apply_swap_in_place(cur, s2[k2]);
    out.push_back(s2[k2]);
    ++k2;
  }
  if (k2 == 0) {
    ++diag.fine_tune_sequential;
    return seq;
  }
  for (std::size_t a = k1; a < s1.size(); ++a) {
    if (!is_allowed(cur, s1[a])) {
      ++diag.fine_tune_sequential;
      return seq;
    }
    apply_swap_in_place(cur, s1[a]);
    out.push_back(s1[a]);
  }
  for (std::size_t b = k2; b < s2.size(); ++b) {
    if (!is_allowed(cur, s2[b])) {
      ++diag.fine_tune_sequential;
      return seq;
    }
    apply_swap_in_place(cur, s2[b]);
    out.push_back(s2[b]);
  }
  ++diag.fine_tune_interleaved;
  return out;
}

}  // namespace

std::vector<Swap> solve_cycle(const BipartiteGraph& z, const AlternatingCycle& cycle,
                              CycleDiagnostics& diag, int depth) {
  diag.max_depth = std::max(diag.max_depth, depth);
  require_cycle_state(z, cycle);
  const int ell = static_cast<int>(cycle.ell());
  if (ell == 2) {
    ++diag.direct_swaps;
    return {Swap::removing(cycle.main(0), cycle.main(1))};
  }
  const BipartiteGraph target = flipped(z, cycle);
  const FMatrix f = f_matrix(z, target, z, cycle);
  const FriendlyResult found = find_friendly_path(f);
  if (const auto* path = std::get_if<FriendlyPath>(&found)) {
    ++diag.friendly_cycles;
    if (path->positions.size() == 1) ++diag.length_one_paths;
    return walk_friendly_path(z, cycle, f, *path, diag);
  }

  ++diag.split_cycles;
  ++diag.same_state_checked;
  std::optional<SplitChoice> choice;
  for (int i = 0; i < ell && !choice; ++i) choice = same_state_split(f, i);
  if (!choice) {
    ++diag.same_state_failed;
    choice = SplitChoice{all_chords(ell).front(), "fallback", false};
  }
  ++diag.split_cases[choice->tag];

  const Pos q = choice->chord;
  const bool q_type1 = f.type(q) == 1;
  const Edge q_edge{cycle.us[static_cast<std::size_t>(q.r)], cycle.vs[static_cast<std::size_t>(q.c)]};
  const std::vector<int> seg =
      flipped_edges({q_type1 ? SpecKind::OK : SpecKind::KO, q}, ell);
  const std::set<int> in_seg(seg.begin(), seg.end());

  std::vector<Edge> present1;
  std::vector<Edge> absent1;
  std::vector<Edge> present2;
  std::vector<Edge> absent2;
  for (int e = 0; e < 2 * ell; ++e) {
    const Edge edge = cycle_edge(cycle, e);
    const bool is_main = e % 2 == 0;
    if (in_seg.count(e)) (is_main ? present1 : absent1).push_back(edge);
    else (is_main ? present2 : absent2).push_back(edge);
  }
  // The chord closes both halves; it flips once in each.
  (q_type1 ? present1 : absent1).push_back(q_edge);
  (q_type1 ? absent2 : present2).push_back(q_edge);

  const AlternatingCycle c1 = AlternatingCycle::from_edges(present1, absent1);
  if (choice->second_possibility && c1.ell() >= 3) {
    ++diag.van_friendly_checked;
    const BipartiteGraph t1 = flipped(z, c1);
    if (!std::holds_alternative<FriendlyPath>(find_friendly_path(f_matrix(z, t1, z, c1)))) {
      ++diag.van_friendly_failed;
    }
  }
  const std::vector<Swap> s1 = solve_cycle(z, c1, diag, depth + 1);
  const BipartiteGraph z1 = replay(z, s1);
  const AlternatingCycle c2 = AlternatingCycle::from_edges(present2, absent2);
  const std::vector<Swap> s2 = solve_cycle(z1, c2, diag, depth + 1);
  return interleave(z, s1, s2, q_edge, diag);
}

CyclePath path_along_cycle(const BipartiteGraph& g, const BipartiteGraph& g2,
                           const BipartiteGraph& x, const BipartiteGraph& y,
                           const AlternatingCycle& cycle) {
  try {
    require_cycle_difference(g, g2, cycle);
    require_same_degrees(x, g);
    require_same_degrees(y, g);
  } catch (const Error& e) {
    throw Error(ErrorCode::PreconditionViolation, e.what());
  }
  auto cells = [](const EdgePartition& p) {
    std::set<Edge> s(p.x_edges.begin(), p.x_edges.end());
    s.insert(p.y_edges.begin(), p.y_edges.end());
    return s;
  };
  const std::set<Edge> a = cells(symmetric_difference(x, g));
  const std::set<Edge> b = cells(symmetric_difference(g, g2));
  const std::set<Edge> c = cells(symmetric_difference(g2, y));
  auto disjoint = [](const std::set<Edge>& p, const std::set<Edge>& q) {
    return std::none_of(p.begin(), p.end(), [&](const Edge& e) { return q.count(e) > 0; });
  };
  if (!disjoint(a, b) || !disjoint(b, c) || !disjoint(a, c)) {
    throw Error(ErrorCode::PreconditionViolation,
                "X^G, G^G' and G'^Y must be pairwise disjoint");
  }
  CyclePath out;
  out.swaps = solve_cycle(g, cycle, out.diagnostics);
  out.states.push_back(g);
  for (const Swap& s : out.swaps) out.states.push_back(apply_swap(out.states.back(), s));
  if (!(out.states.back() == g2)) {
    throw Error(ErrorCode::PreconditionViolation, "cycle path does not end at G'");
  }
  return out;
}

}  // namespace swapchain
