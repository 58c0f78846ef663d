#include "rcx/lattice_set.hpp"

#include "rcx/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rcx {

LatticeSet::LatticeSet(int dim, std::vector<LatticePoint> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim <= 0) throw std::invalid_argument("LatticeSet: dimension must be positive");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim) {
      throw std::invalid_argument("LatticeSet: point dimension mismatch");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticeSet::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

LatticeSet LatticeSet::with(const LatticePoint& p) const {
  auto pts = points_;
  pts.push_back(p);
  return LatticeSet(dim_, std::move(pts));
}

LatticeSet LatticeSet::united(const LatticeSet& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("united: dimension mismatch");
  auto pts = points_;
  pts.insert(pts.end(), other.points_.begin(), other.points_.end());
  return LatticeSet(dim_, std::move(pts));
}

LatticeSet LatticeSet::minus(const LatticeSet& other) const {
  std::vector<LatticePoint> pts;
  for (const auto& p : points_) {
    if (!other.contains(p)) pts.push_back(p);
  }
  return LatticeSet(dim_, std::move(pts));
}

namespace {

std::pair<LatticePoint, LatticePoint> bounding_box(const LatticeSet& x) {
  const int d = x.dim();
  LatticePoint lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    lo[k] = hi[k] = x.points()[0][k];
  }
  for (const auto& p : x.points()) {
    for (int k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  return {lo, hi};
}

template <typename F>
void for_each_in_box(const LatticePoint& lo, const LatticePoint& hi, F&& f) {
  const int d = static_cast<int>(lo.size());
  LatticePoint p = lo;
  for (;;) {
    f(p);
    int k = d - 1;
    for (; k >= 0; --k) {
      if (p[k] < hi[k]) {
        ++p[k];
        break;
      }
      p[k] = lo[k];
    }
    if (k < 0) break;
  }
}

}  // namespace

bool is_lattice_convex(const LatticeSet& x) {
  if (x.empty()) throw std::invalid_argument("is_lattice_convex: empty set");
  const auto [lo, hi] = bounding_box(x);
  const auto hull = to_rat_points(x.points());
  bool convex = true;
  for_each_in_box(lo, hi, [&](const LatticePoint& p) {
    if (!convex || x.contains(p)) return;
    if (conv_membership(to_rat_point(p), hull)) convex = false;
  });
  return convex;
}

int dim_of(const LatticeSet& x) {
  if (x.empty()) throw std::invalid_argument("dim_of: empty set");
  return affine_dim(x.points());
}

LatticeSet ball(const LatticeSet& x, long long t) {
  if (t < 1) throw std::invalid_argument("ball: t must be >= 1");
  const int d = x.dim();
  std::vector<LatticePoint> pts;
  LatticePoint lo(d, -t), hi(d, t);
  for_each_in_box(lo, hi, [&](const LatticePoint& p) { pts.push_back(p); });
  return LatticeSet(d, std::move(pts));
}

bool is_observer(const LatticeSet& x, const LatticePoint& z) {
  if (x.contains(z)) throw std::invalid_argument("is_observer: z already in the set");
  return is_lattice_convex(x.with(z));
}

LatticeSet observers_in_region(const LatticeSet& x, const LatticeSet& region) {
  std::vector<LatticePoint> obs;
  for (const auto& z : region.points()) {
    if (x.contains(z)) continue;
    if (is_observer(x, z)) obs.push_back(z);
  }
  return LatticeSet(x.dim(), std::move(obs));
}

std::optional<LatticeSet> parity_candidates(const LatticeSet& x) {
  const int d = x.dim();
  if (d > 20) throw std::invalid_argument("parity_candidates: dimension too large");
  std::set<unsigned long> classes;
  for (const auto& p : x.points()) {
    unsigned long mask = 0;
    for (int k = 0; k < d; ++k) {
      if (p[k] % 2 != 0) mask |= 1ul << k;
    }
    classes.insert(mask);
  }
  if (classes.size() != (1ul << d)) return std::nullopt;
  std::vector<LatticePoint> pts;
  for (const auto& p : x.points()) {
    for (const auto& q : x.points()) {
      LatticePoint r(d);
      for (int k = 0; k < d; ++k) r[k] = 2 * p[k] - q[k];
      pts.push_back(std::move(r));
    }
  }
  return LatticeSet(d, std::move(pts));
}

LatticeSet simplex_set(int d) {
  if (d < 1) throw std::invalid_argument("simplex_set: d must be >= 1");
  std::vector<LatticePoint> pts;
  pts.emplace_back(d, 0);
  for (int i = 0; i < d; ++i) {
    LatticePoint e(d, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return LatticeSet(d, std::move(pts));
}

LatticeSet cross_set(int d) {
  if (d < 1) throw std::invalid_argument("cross_set: d must be >= 1");
  std::vector<LatticePoint> pts;
  pts.emplace_back(d, 0);
  for (int i = 0; i < d; ++i) {
    LatticePoint e(d, 0);
    e[i] = 1;
    pts.push_back(e);
    e[i] = -1;
    pts.push_back(std::move(e));
  }
  return LatticeSet(d, std::move(pts));
}

LatticeSet box_set(const std::vector<std::pair<long long, long long>>& segments) {
  if (segments.empty()) throw std::invalid_argument("box_set: no segments");
  const int d = static_cast<int>(segments.size());
  LatticePoint lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    if (segments[k].first > segments[k].second) {
      throw std::invalid_argument("box_set: segment with a > b");
    }
    lo[k] = segments[k].first;
    hi[k] = segments[k].second;
  }
  std::vector<LatticePoint> pts;
  for_each_in_box(lo, hi, [&](const LatticePoint& p) { pts.push_back(p); });
  return LatticeSet(d, std::move(pts));
}

LatticeSet debruijn_set(int d) {
  if (d < 3) throw std::invalid_argument("debruijn_set: d must be >= 3");
  std::vector<LatticePoint> pts;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      for (int l = k + 1; l < d; ++l) {
        LatticePoint p(d, 0);
        p[j] = 1;
        p[k] = -1;
        p[l] = 1;
        pts.push_back(std::move(p));
      }
    }
  }
  return LatticeSet(d, std::move(pts));
}

const std::vector<LatticePoint>& delta3_certificate_points() {
  static const std::vector<LatticePoint> pts = {
      {0, 1, 1},    // 0
      {1, 0, 1},    // 1
      {0, 2, 0},    // 2
      {1, 1, -1},   // 3
      {1, 1, -2},   // 4
      {0, 0, -1},   // 5
      {-1, 0, 1},   // 6
      {-1, 0, 0},   // 7
      {2, 0, 0},    // 8
      {0, 0, 2},    // 9
      {2, 0, -1},   // 10
      {-1, 0, 2},   // 11
      {0, -1, 1},   // 12
      {0, -1, 0},   // 13
      {1, 1, 1},    // 14
      {-1, 1, 0},   // 15
      {1, 1, 0},    // 16
      {0, 2, -1},   // 17
      {0, -1, 2},   // 18
      {-2, 1, 1},   // 19
      {-1, 1, 1},   // 20
      {2, -1, 0},   // 21
      {-1, 2, 0},   // 22
      {1, 0, -1},   // 23
      {1, -1, 0},   // 24
      {1, -1, 1},   // 25
      {1, -2, 1},   // 26
      {0, 1, -1},   // 27
  };
  return pts;
}

LatticeSet delta3_certificate() {
  return LatticeSet(3, delta3_certificate_points());
}

LatticeSet eq3_set(int k) {
  std::vector<LatticePoint> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  switch (k) {
    case 1:
      break;
    case 2:
      pts.push_back({-1, 0, 1});
      break;
    case 3:
      pts.push_back({-1, 0, 1});
      pts.push_back({-1, 1, 0});
      break;
    case 4:
      pts.push_back({-1, 0, 1});
      pts.push_back({0, -1, 1});
      break;
    default:
      throw std::invalid_argument("eq3_set: k must be in 1..4");
  }
  return LatticeSet(3, std::move(pts));
}

}  // namespace rcx
