#include "rcx/geometry.hpp"

#include <stdexcept>

namespace rcx {

namespace {

int common_dim(const std::vector<RatPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  const int d = static_cast<int>(pts[0].size());
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != d) {
      throw std::invalid_argument("point dimension mismatch");
    }
  }
  return d;
}

}  // namespace

std::vector<RatPoint> to_rat_points(const std::vector<LatticePoint>& pts) {
  std::vector<RatPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_rat_point(p));
  return out;
}

bool conv_membership(const RatPoint& q, const std::vector<RatPoint>& hull_points) {
  const int d = common_dim(hull_points);
  if (static_cast<int>(q.size()) != d) {
    throw std::invalid_argument("conv_membership: dimension mismatch");
  }
  const std::size_t n = hull_points.size();
  // Columns: lambda_i >= 0. Rows: sum lambda_i * s_i = q, sum lambda_i = 1.
  std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> b(d + 1, Rat(0));
  for (int k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) a[k][i] = hull_points[i][k];
    b[k] = q[k];
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  b[d] = 1;
  return detail::feasible_nonneg(std::move(a), std::move(b)).has_value();
}

bool conv_membership(const LatticePoint& q, const std::vector<LatticePoint>& hull_points) {
  return conv_membership(to_rat_point(q), to_rat_points(hull_points));
}

bool segment_hits_hull(const RatPoint& p, const RatPoint& q,
                       const std::vector<RatPoint>& hull_points) {
  const int d = common_dim(hull_points);
  if (static_cast<int>(p.size()) != d || static_cast<int>(q.size()) != d) {
    throw std::invalid_argument("segment_hits_hull: dimension mismatch");
  }
  const std::size_t n = hull_points.size();
  // Point t*p + (1-t)*q in conv(S) for some t in [0,1].
  // Columns: lambda_i (n), t, slack u with t + u = 1. All nonnegative.
  // Rows: sum lambda_i s_i + t*(q - p) = q, sum lambda = 1, t + u = 1.
  const std::size_t cols = n + 2;
  std::vector<std::vector<Rat>> a(d + 2, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> b(d + 2, Rat(0));
  for (int k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) a[k][i] = hull_points[i][k];
    a[k][n] = q[k] - p[k];
    b[k] = q[k];
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  b[d] = 1;
  a[d + 1][n] = 1;
  a[d + 1][n + 1] = 1;
  b[d + 1] = 1;
  return detail::feasible_nonneg(std::move(a), std::move(b)).has_value();
}

bool segment_hits_hull(const LatticePoint& p, const LatticePoint& q,
                       const std::vector<LatticePoint>& hull_points) {
  return segment_hits_hull(to_rat_point(p), to_rat_point(q), to_rat_points(hull_points));
}

int affine_dim(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_dim: empty point set");
  const std::size_t d = pts[0].size();
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> r(d);
    for (std::size_t k = 0; k < d; ++k) r[k] = make_rat(pts[i][k] - pts[0][k]);
    rows.push_back(std::move(r));
  }
  // Gaussian elimination, exact.
  int rank = 0;
  std::size_t col = 0;
  while (col < d && rank < static_cast<int>(rows.size())) {
    std::size_t pivot = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rat f = rows[i][col] / rows[rank][col];
      for (std::size_t k = col; k < d; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
    ++col;
  }
  return rank;
}

}  // namespace rcx
