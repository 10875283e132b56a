#include "swapchain/f_matrix.hpp"

#include <algorithm>

#include "swapchain/errors.hpp"

namespace swapchain {

FMatrix FMatrix::initial(int ell, const std::vector<int>& chord_types_row_major) {
  FMatrix f{ell, IntMatrix(static_cast<std::size_t>(ell), static_cast<std::size_t>(ell))};
  std::size_t next = 0;
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      const Pos p{r, c};
      if (is_main_diagonal(p, ell)) f.at(p) = 1;
      else if (is_small_diagonal(p, ell)) f.at(p) = 0;
      else f.at(p) = 3 * chord_types_row_major.at(next++);
    }
  }
  return f;
}

void require_cycle_difference(const BipartiteGraph& g, const BipartiteGraph& g2,
                              const AlternatingCycle& cycle) {
  const EdgePartition d = symmetric_difference(g, g2);
  std::vector<Edge> mains = cycle.main_edges();
  std::vector<Edge> smalls = cycle.small_edges();
  std::sort(mains.begin(), mains.end());
  std::sort(smalls.begin(), smalls.end());
  if (d.x_edges != mains || d.y_edges != smalls) {
    throw Error(ErrorCode::CycleMismatch, "E(G ^ G') is not the given cycle");
  }
}

FMatrix f_matrix(const BipartiteGraph& g, const BipartiteGraph& g2, const BipartiteGraph& z,
                 const AlternatingCycle& cycle) {
  require_cycle_difference(g, g2, cycle);
  require_same_degrees(g, z);
  const int ell = static_cast<int>(cycle.ell());
  FMatrix f{ell, IntMatrix(cycle.ell(), cycle.ell())};
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      const int u = cycle.us[static_cast<std::size_t>(r)];
      const int v = cycle.vs[static_cast<std::size_t>(c)];
      const int zv = z.has_edge(u, v) ? 1 : 0;
      if (is_chord({r, c}, ell)) {
        f.at({r, c}) = (g.has_edge(u, v) ? 1 : 0) + (g2.has_edge(u, v) ? 1 : 0) + zv;
      } else {
        f.at({r, c}) = zv;
      }
    }
  }
  return f;
}

IntMatrix hat_matrix(const BipartiteGraph& x, const BipartiteGraph& y, const BipartiteGraph& z) {
  if (x.k() != y.k() || x.k() != z.k() || x.l() != y.l() || x.l() != z.l()) {
    throw Error(ErrorCode::ShapeMismatch, "hat matrix needs three graphs of one shape");
  }
  IntMatrix m(x.k(), x.l());
  for (int u = 0; u < static_cast<int>(x.k()); ++u) {
    for (int v = 0; v < static_cast<int>(x.l()); ++v) {
      m.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) =
          (x.has_edge(u, v) ? 1 : 0) + (y.has_edge(u, v) ? 1 : 0) - (z.has_edge(u, v) ? 1 : 0);
    }
  }
  return m;
}

IntMatrix restrict_to_cycle(const IntMatrix& hat, const AlternatingCycle& cycle) {
  IntMatrix m(cycle.ell(), cycle.ell());
  for (std::size_t r = 0; r < cycle.ell(); ++r) {
    for (std::size_t c = 0; c < cycle.ell(); ++c) {
      m.at(r, c) = hat.at(static_cast<std::size_t>(cycle.us[r]), static_cast<std::size_t>(cycle.vs[c]));
    }
  }
  return m;
}

IntMatrix f_to_hat(const FMatrix& f) {
  IntMatrix m(f.cells.rows, f.cells.cols);
  for (int r = 0; r < f.ell; ++r) {
    for (int c = 0; c < f.ell; ++c) {
      const int x = f.at({r, c});
      int h = 0;
      if (!is_chord({r, c}, f.ell)) {
        h = 1 - x;
      } else {
        static constexpr int table[] = {0, -1, 2, 1};
        h = table[x];
      }
      m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = h;
    }
  }
  return m;
}

FMatrix hat_to_f(const IntMatrix& local_hat) {
  const int ell = static_cast<int>(local_hat.rows);
  FMatrix f{ell, IntMatrix(local_hat.rows, local_hat.cols)};
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      const int h = local_hat.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (!is_chord({r, c}, ell)) {
        f.at({r, c}) = 1 - h;
      } else {
        static constexpr int table[] = {1, 0, 3, 2};  // indexed by h + 1
        f.at({r, c}) = table[h + 1];
      }
    }
  }
  return f;
}

}  // namespace swapchain
