#include "swapchain/ryser.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "swapchain/errors.hpp"
#include "swapchain/realization.hpp"

namespace swapchain {

std::vector<Swap> ryser_sequence(const BipartiteGraph& g1, const BipartiteGraph& g2) {
  require_same_degrees(g1, g2);
  const int l = static_cast<int>(g1.l());
  std::vector<int> cols(static_cast<std::size_t>(l));
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(),
                   [&](int x, int y) { return g1.col_degree(x) > g1.col_degree(y); });

  std::vector<char> active(static_cast<std::size_t>(l), 1);
  BipartiteGraph h1 = g1;
  BipartiteGraph h2 = g2;
  std::vector<Swap> forward;
  std::vector<Swap> backward;
  for (int v : cols) {
    PushUpResult p1 = push_up(h1, v, active);
    PushUpResult p2 = push_up(h2, v, active);
    forward.insert(forward.end(), p1.swaps.begin(), p1.swaps.end());
    backward.insert(backward.end(), p2.swaps.begin(), p2.swaps.end());
    h1 = std::move(p1.graph);
    h2 = std::move(p2.graph);
    active[static_cast<std::size_t>(v)] = 0;
  }
  if (!(h1 == h2)) {
    throw Error(ErrorCode::PreconditionViolation, "push-up canonical forms disagree");
  }
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
    forward.push_back(it->inverse());
  }
  if (!(replay(g1, forward) == g2)) {
    throw Error(ErrorCode::PreconditionViolation, "swap sequence does not reach the target");
  }
  return forward;
}

std::optional<std::vector<Swap>> shortest_swap_sequence(const BipartiteGraph& g1,
                                                        const BipartiteGraph& g2, int cap) {
  require_same_degrees(g1, g2);
  if (g1 == g2) return std::vector<Swap>{};
  struct Node {
    BipartiteGraph g;
    std::size_t parent;
    Swap via;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> depth;
  nodes.push_back({g1, 0, {}});
  depth.emplace(g1.key(), 0);
  const std::string goal = g2.key();
  std::size_t head = 0;
  while (head < nodes.size()) {
    const std::size_t cur = head++;
    const int d = depth.at(nodes[cur].g.key());
    if (d >= cap) continue;
    for (const Swap& s : allowed_swaps(nodes[cur].g)) {
      BipartiteGraph next = apply_swap(nodes[cur].g, s);
      std::string key = next.key();
      if (depth.count(key)) continue;
      depth.emplace(key, d + 1);
      nodes.push_back({std::move(next), cur, s});
      if (key == goal) {
        std::vector<Swap> path;
        for (std::size_t at = nodes.size() - 1; at != 0; at = nodes[at].parent) {
          path.push_back(nodes[at].via);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
    }
  }
  return std::nullopt;
}

std::optional<int> swap_distance(const BipartiteGraph& g1, const BipartiteGraph& g2, int cap) {
  auto path = shortest_swap_sequence(g1, g2, cap);
  if (!path) return std::nullopt;
  return static_cast<int>(path->size());
}

}  // namespace swapchain
