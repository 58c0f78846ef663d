#pragma once

// Brute-force reference implementations used to pin expected values. They
// deliberately avoid the library's LP path: membership goes through exact
// Gaussian elimination over Caratheodory subsets, hull intersection through
// membership of the origin in the difference set, covers through exhaustive
// labelings.

#include "rcx/rational.hpp"
#include "rcx/lattice_set.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using rcx::LatticePoint;
using rcx::Rat;
using rcx::RatPoint;

// Unique solution of the square-ish system M lambda = rhs (by elimination);
// nullopt when inconsistent or underdetermined.
inline std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> m,
                                                    std::vector<Rat> rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
      rhs[i] -= f * rhs[rank];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;  // inconsistent
  }
  if (rank < cols) return std::nullopt;  // underdetermined: caller skips
  std::vector<Rat> x(cols);
  for (std::size_t r = 0; r < rank; ++r) {
    x[pivot_col_of_row[r]] = rhs[r] / m[r][pivot_col_of_row[r]];
  }
  return x;
}

// q in conv(pts), decided by enumerating affinely independent subsets of
// size <= d+1 (Caratheodory). Exponential, for small fixtures only.
inline bool member(const RatPoint& q, const std::vector<RatPoint>& pts) {
  const int d = static_cast<int>(q.size());
  const int n = static_cast<int>(pts.size());
  std::vector<int> subset;
  const auto try_subset = [&](const std::vector<int>& idx) -> bool {
    const std::size_t m = idx.size();
    std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(m, Rat(0)));
    std::vector<Rat> rhs(d + 1, Rat(0));
    for (int k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < m; ++i) a[k][i] = pts[idx[i]][k];
      rhs[k] = q[k];
    }
    for (std::size_t i = 0; i < m; ++i) a[d][i] = 1;
    rhs[d] = 1;
    const auto lambda = solve_unique(std::move(a), std::move(rhs));
    if (!lambda) return false;
    for (const auto& l : *lambda) {
      if (l < 0) return false;
    }
    return true;
  };
  const auto rec = [&](auto&& self, int next, int remaining) -> bool {
    if (!subset.empty() && try_subset(subset)) return true;
    if (remaining == 0 || next >= n) return false;
    for (int i = next; i < n; ++i) {
      subset.push_back(i);
      if (self(self, i + 1, remaining - 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return rec(rec, 0, d + 1);
}

inline RatPoint rat_point(const LatticePoint& p) { return rcx::to_rat_point(p); }

inline std::vector<RatPoint> rat_points(const std::vector<LatticePoint>& pts) {
  std::vector<RatPoint> out;
  for (const auto& p : pts) out.push_back(rat_point(p));
  return out;
}

// conv(a) cap conv(b) != {} iff 0 in conv{a_i - b_j}.
inline bool hulls_intersect(const std::vector<RatPoint>& a, const std::vector<RatPoint>& b) {
  const int d = static_cast<int>(a[0].size());
  std::vector<RatPoint> diffs;
  for (const auto& p : a) {
    for (const auto& q : b) {
      RatPoint diff(d);
      for (int k = 0; k < d; ++k) diff[k] = p[k] - q[k];
      diffs.push_back(std::move(diff));
    }
  }
  return member(RatPoint(d, Rat(0)), diffs);
}

inline bool separable(const std::vector<RatPoint>& inner, const std::vector<RatPoint>& subset) {
  return !hulls_intersect(inner, subset);
}

inline bool segment_hits(const RatPoint& p, const RatPoint& q,
                         const std::vector<RatPoint>& hull) {
  return hulls_intersect({p, q}, hull);
}

// z is an observer of x: the union stays lattice-convex (box scan).
inline bool is_observer(const rcx::LatticeSet& x, const LatticePoint& z) {
  auto with_z = x.with(z);
  const int d = x.dim();
  LatticePoint lo = with_z.points()[0], hi = lo;
  for (const auto& p : with_z.points()) {
    for (int k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  const auto hull = rat_points(with_z.points());
  LatticePoint cur = lo;
  for (;;) {
    if (!with_z.contains(cur) && member(rat_point(cur), hull)) return false;
    int k = d - 1;
    for (; k >= 0; --k) {
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
    }
    if (k < 0) break;
  }
  return true;
}

// Smallest number of oracle-separable classes covering every outer point;
// exhaustive over labelings, usable for a handful of points only.
inline int min_cover(const std::vector<RatPoint>& inner,
                     const std::vector<LatticePoint>& outer, int kmax) {
  const int n = static_cast<int>(outer.size());
  if (n == 0) return 0;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> label(n, 0);
    for (;;) {
      std::vector<std::vector<RatPoint>> classes(k);
      for (int i = 0; i < n; ++i) classes[label[i]].push_back(rat_point(outer[i]));
      bool ok = true;
      for (const auto& c : classes) {
        if (!c.empty() && !separable(inner, c)) {
          ok = false;
          break;
        }
      }
      if (ok) return k;
      int i = n - 1;
      for (; i >= 0; --i) {
        if (label[i] + 1 < k) {
          ++label[i];
          break;
        }
        label[i] = 0;
      }
      if (i < 0) break;
    }
  }
  return kmax + 1;
}

// Proper-2-colorability of an adjacency matrix (BFS).
inline bool bipartite(const std::vector<std::vector<uint8_t>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue = {s};
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int u = 0; u < n; ++u) {
        if (!adj[v][u]) continue;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Deterministic 2x2 / 3x3 unimodular matrices with entries in [-2, 2].
inline std::vector<std::vector<std::vector<long long>>> unimodular_samples(int d) {
  if (d == 2) {
    return {
        {{1, 1}, {0, 1}},
        {{1, -2}, {0, -1}},
        {{2, 1}, {1, 1}},
        {{0, 1}, {-1, 0}},
        {{1, 0}, {2, 1}},
    };
  }
  return {
      {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}},
      {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}},
      {{2, 1, 0}, {1, 1, 0}, {1, 0, 1}},
      {{1, 0, 2}, {0, 1, 0}, {0, 0, 1}},
      {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
  };
}

inline LatticePoint apply_unimodular(const std::vector<std::vector<long long>>& u,
                                     const LatticePoint& p, const LatticePoint& shift) {
  const int d = static_cast<int>(p.size());
  LatticePoint out(d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out[i] += u[i][j] * p[j];
    out[i] += shift[i];
  }
  return out;
}

inline rcx::LatticeSet apply_unimodular(const std::vector<std::vector<long long>>& u,
                                        const rcx::LatticeSet& x, const LatticePoint& shift) {
  std::vector<LatticePoint> pts;
  for (const auto& p : x.points()) pts.push_back(apply_unimodular(u, p, shift));
  return rcx::LatticeSet(x.dim(), std::move(pts));
}

}  // namespace oracle
