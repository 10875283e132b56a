#include "swapchain/cycle_frame.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "swapchain/errors.hpp"

namespace swapchain {

std::vector<Pos> all_chords(int ell) {
  std::vector<Pos> out;
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      if (is_chord({r, c}, ell)) out.push_back({r, c});
    }
  }
  return out;
}

std::vector<Pos> cousins(Pos p, int ell) {
  if (!is_chord(p, ell)) {
    throw Error(ErrorCode::DiagonalPosition, "cousins are defined for chords only");
  }
  std::vector<Pos> out;
  for (int dr : {-1, 0}) {
    for (int dc : {0, 1}) {
      const Pos q{mod(p.c + dr, ell), mod(p.r + dc, ell)};
      if (is_chord(q, ell)) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Pos> rook_neighbours(Pos p, int ell) {
  std::vector<Pos> out;
  const Pos cand[] = {{mod(p.r - 1, ell), p.c}, {mod(p.r + 1, ell), p.c},
                      {p.r, mod(p.c - 1, ell)}, {p.r, mod(p.c + 1, ell)}};
  for (const Pos& q : cand) {
    if (!is_main_diagonal(q, ell) && q != p) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Pos> king_chord_neighbours(Pos p, int ell) {
  std::vector<Pos> out;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      const Pos q{mod(p.r + dr, ell), mod(p.c + dc, ell)};
      if (q != p && is_chord(q, ell)) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int rook_distance(Pos a, Pos b, int ell) {
  if (is_main_diagonal(a, ell) || is_main_diagonal(b, ell)) return -1;
  std::map<Pos, int> dist{{a, 0}};
  std::deque<Pos> queue{a};
  while (!queue.empty()) {
    const Pos p = queue.front();
    queue.pop_front();
    if (p == b) return dist[p];
    for (const Pos& q : rook_neighbours(p, ell)) {
      if (dist.emplace(q, dist[p] + 1).second) queue.push_back(q);
    }
  }
  return -1;
}

std::vector<Pos> down_line(int i, int ell) {
  std::vector<Pos> out;
  for (int m = 1; m < ell; ++m) {
    const Pos p{mod(i + m, ell), mod(i - m, ell)};
    if (!is_chord(p, ell)) break;
    out.push_back(p);
  }
  return out;
}

std::vector<Pos> up_line(int i, int ell) {
  std::vector<Pos> out;
  for (int m = 1; m < ell; ++m) {
    const Pos p{mod(i - m, ell), mod(i + m, ell)};
    if (!is_chord(p, ell)) break;
    out.push_back(p);
  }
  return out;
}

}  // namespace swapchain
