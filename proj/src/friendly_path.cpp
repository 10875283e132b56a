#include "swapchain/friendly_path.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "swapchain/errors.hpp"

namespace swapchain {

namespace {

std::size_t idx(Pos p, int ell) {
  return static_cast<std::size_t>(p.r) * static_cast<std::size_t>(ell) +
         static_cast<std::size_t>(p.c);
}

std::vector<Pos> chord_rook_neighbours(Pos p, int ell) {
  std::vector<Pos> out;
  for (const Pos& q : rook_neighbours(p, ell)) {
    if (is_chord(q, ell)) out.push_back(q);
  }
  return out;
}

// Shortest rook path over `white` chords from sources whose start root has
// type `root_type` to end chords whose end root has the other type.
std::optional<std::vector<Pos>> search(const FMatrix& f, const std::vector<char>& white,
                                       int root_type) {
  const int ell = f.ell;
  std::map<Pos, Pos> parent;
  std::deque<Pos> queue;
  for (const Pos& p : all_chords(ell)) {
    if (white[idx(p, ell)] && is_start_chord(p, ell) && f.at(start_root(p, ell)) == root_type) {
      parent.emplace(p, p);
      queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    const Pos p = queue.front();
    queue.pop_front();
    if (is_end_chord(p, ell) && f.at(end_root(p, ell)) != root_type) {
      std::vector<Pos> path{p};
      while (parent.at(path.back()) != path.back()) path.push_back(parent.at(path.back()));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const Pos& q : chord_rook_neighbours(p, ell)) {
      if (white[idx(q, ell)] && parent.emplace(q, p).second) queue.push_back(q);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Pos>> king_components(const std::vector<Pos>& cells, int ell) {
  std::set<Pos> left(cells.begin(), cells.end());
  std::vector<std::vector<Pos>> out;
  while (!left.empty()) {
    std::vector<Pos> comp;
    std::deque<Pos> queue{*left.begin()};
    left.erase(left.begin());
    while (!queue.empty()) {
      const Pos p = queue.front();
      queue.pop_front();
      comp.push_back(p);
      for (const Pos& q : king_chord_neighbours(p, ell)) {
        if (left.erase(q)) queue.push_back(q);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Pos> cousin_union(const std::vector<Pos>& cells, int ell) {
  std::set<Pos> s;
  for (const Pos& p : cells) {
    for (const Pos& q : cousins(p, ell)) s.insert(q);
  }
  return {s.begin(), s.end()};
}

}  // namespace

bool is_friendly(const FMatrix& f, Pos p) {
  return cousin_witness(f, p).has_value();
}

std::optional<Pos> cousin_witness(const FMatrix& f, Pos p) {
  for (const Pos& q : cousins(p, f.ell)) {
    if (f.type(q) == f.type(p)) return q;
  }
  return std::nullopt;
}

bool bands_connected(int ell, const std::vector<char>& allowed) {
  std::set<Pos> seen;
  std::deque<Pos> queue;
  for (const Pos& p : all_chords(ell)) {
    if (allowed[idx(p, ell)] && is_start_chord(p, ell)) {
      seen.insert(p);
      queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    const Pos p = queue.front();
    queue.pop_front();
    if (is_end_chord(p, ell)) return true;
    for (const Pos& q : chord_rook_neighbours(p, ell)) {
      if (allowed[idx(q, ell)] && seen.insert(q).second) queue.push_back(q);
    }
  }
  return false;
}

FriendlyResult find_friendly_path(const FMatrix& f) {
  const int ell = f.ell;
  if (ell < 3) throw Error(ErrorCode::PreconditionViolation, "friendly paths need l >= 3");
  std::vector<char> white(static_cast<std::size_t>(ell * ell), 0);
  std::vector<Pos> black;
  for (const Pos& p : all_chords(ell)) {
    if (is_friendly(f, p)) white[idx(p, ell)] = 1;
    else black.push_back(p);
  }

  std::optional<std::vector<Pos>> best;
  for (int root_type : {0, 1}) {
    auto path = search(f, white, root_type);
    if (path && (!best || path->size() < best->size() ||
                 (path->size() == best->size() && *path < *best))) {
      best = std::move(path);
    }
  }
  if (best) {
    FriendlyPath fp;
    fp.positions = std::move(*best);
    for (const Pos& p : fp.positions) fp.witnesses.push_back(*cousin_witness(f, p));
    return fp;
  }
  if (bands_connected(ell, white)) {
    throw Error(ErrorCode::PreconditionViolation,
                "friendly chords cross the band but no crossing has roots of different types");
  }

  for (auto& comp : king_components(black, ell)) {
    std::vector<char> rest(static_cast<std::size_t>(ell * ell), 0);
    for (const Pos& p : all_chords(ell)) rest[idx(p, ell)] = 1;
    for (const Pos& p : comp) rest[idx(p, ell)] = 0;
    if (!bands_connected(ell, rest)) {
      SteinhausSet s;
      s.type = f.type(comp.front());
      s.cousin_set = cousin_union(comp, ell);
      s.cells = std::move(comp);
      return s;
    }
  }
  // Unreachable by the hex-board duality on the annulus of chords.
  throw Error(ErrorCode::PreconditionViolation, "no friendly path and no blocking set");
}

std::vector<Pos> adjusted_positions(const FriendlyPath& path, const FMatrix& f) {
  std::vector<Pos> out;
  for (const Pos& p : path.positions) {
    const auto w = cousin_witness(f, p);
    if (!w) throw Error(ErrorCode::NoCousinWitness, "path position has no same-type cousin");
    out.push_back(f.type(p) == 0 ? p : *w);
  }
  return out;
}

std::string check_friendly_path(const FMatrix& f, const FriendlyPath& path) {
  const int ell = f.ell;
  const auto& ps = path.positions;
  if (ps.empty()) return "empty path";
  if (std::set<Pos>(ps.begin(), ps.end()).size() != ps.size()) return "repeated position";
  if (path.witnesses.size() != ps.size()) return "witness count mismatch";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!is_chord(ps[i], ell)) return "position on a diagonal";
    const auto w = cousin_witness(f, ps[i]);
    if (!w) return "unfriendly position";
    if (*w != path.witnesses[i]) return "witness is not the lowest same-type cousin";
    if (i + 1 < ps.size() && rook_distance(ps[i], ps[i + 1], ell) != 1) {
      return "consecutive positions not one rook step apart";
    }
  }
  if (!is_start_chord(ps.front(), ell)) return "first position not next to the main diagonal";
  if (!is_end_chord(ps.back(), ell)) return "last position not next to the small diagonal";
  if (f.at(start_root(ps.front(), ell)) == f.at(end_root(ps.back(), ell))) {
    return "endpoint roots have the same type";
  }
  return {};
}

std::string check_steinhaus_set(const FMatrix& f, const SteinhausSet& set) {
  const int ell = f.ell;
  if (set.cells.empty()) return "empty set";
  for (const Pos& p : set.cells) {
    if (!is_chord(p, ell)) return "cell on a diagonal";
    if (is_friendly(f, p)) return "friendly cell";
    if (f.type(p) != set.type) return "cells of mixed type";
  }
  if (king_components(set.cells, ell).size() != 1) return "not king-connected";
  std::vector<char> rest(static_cast<std::size_t>(ell * ell), 0);
  for (const Pos& p : all_chords(ell)) rest[idx(p, ell)] = 1;
  for (const Pos& p : set.cells) rest[idx(p, ell)] = 0;
  if (bands_connected(ell, rest)) return "a rook path avoids the set";
  if (set.cousin_set != cousin_union(set.cells, ell)) return "cousin set mismatch";
  for (const Pos& q : set.cousin_set) {
    if (f.type(q) != 1 - set.type) return "cousin set not single-typed";
  }
  return {};
}

bool cousin_set_meets_all_lines(const SteinhausSet& set, int ell) {
  const std::set<Pos> cs(set.cousin_set.begin(), set.cousin_set.end());
  auto meets = [&](const std::vector<Pos>& line) {
    return std::any_of(line.begin(), line.end(), [&](const Pos& p) { return cs.count(p) > 0; });
  };
  for (int i = 0; i < ell; ++i) {
    if (!meets(down_line(i, ell)) || !meets(up_line(i, ell))) return false;
  }
  return true;
}

}  // namespace swapchain
