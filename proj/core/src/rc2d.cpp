#include "rcx/rc2d.hpp"

#include "rcx/geometry.hpp"
#include "rcx/lp.hpp"
#include "rcx/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rcx {

namespace {

using I128 = __int128;

I128 cross(long long ox, long long oy, long long ax, long long ay, long long bx,
           long long by) {
  return static_cast<I128>(ax - ox) * (by - oy) - static_cast<I128>(ay - oy) * (bx - ox);
}

I128 dist2(long long ox, long long oy, long long px, long long py) {
  return static_cast<I128>(px - ox) * (px - ox) + static_cast<I128>(py - oy) * (py - oy);
}

// Counterclockwise hull vertices, starting at the bottom-most (then
// left-most) point. Collinear points are dropped; on a tie in polar angle
// the nearer point sorts first.
std::vector<LatticePoint> graham_hull(std::vector<LatticePoint> pts) {
  auto pivot_it = std::min_element(pts.begin(), pts.end(),
                                   [](const LatticePoint& p, const LatticePoint& q) {
                                     if (p[1] != q[1]) return p[1] < q[1];
                                     return p[0] < q[0];
                                   });
  std::iter_swap(pts.begin(), pivot_it);
  const LatticePoint pivot = pts[0];
  std::sort(pts.begin() + 1, pts.end(),
            [&](const LatticePoint& p, const LatticePoint& q) {
              const I128 c = cross(pivot[0], pivot[1], p[0], p[1], q[0], q[1]);
              if (c != 0) return c > 0;
              return dist2(pivot[0], pivot[1], p[0], p[1]) <
                     dist2(pivot[0], pivot[1], q[0], q[1]);
            });
  // The trailing run collinear with the pivot must be walked farthest-first
  // for the scan to terminate at the true last vertex.
  if (pts.size() > 2) {
    std::size_t tail = pts.size() - 1;
    while (tail > 1 && cross(pivot[0], pivot[1], pts[tail][0], pts[tail][1],
                             pts[tail - 1][0], pts[tail - 1][1]) == 0) {
      --tail;
    }
    std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(tail), pts.end());
  }
  std::vector<LatticePoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2][0], hull[hull.size() - 2][1],
                 hull[hull.size() - 1][0], hull[hull.size() - 1][1], p[0], p[1]) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

// ax + by = 1 for coprime (a, b).
std::pair<long long, long long> ext_gcd_pair(long long a, long long b) {
  long long old_r = a, r = b;
  long long old_s = 1, s = 0;
  long long old_t = 0, t = 1;
  while (r != 0) {
    const long long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_s, old_t};
}

HPolyhedron to_hpoly(const PolygonHRep& p) {
  HPolyhedron h;
  h.dim = 2;
  for (const auto& row : p.rows) {
    h.rows.push_back(Inequality{{make_rat(row.a), make_rat(row.b)}, make_rat(row.c)});
  }
  return h;
}

struct RatVertex {
  Rat x, y;
};

// Vertex shared by consecutive rows j and j+1 of a bounded ccw polygon.
RatVertex vertex_of(const PolygonRow& r1, const PolygonRow& r2) {
  const Rat det = make_rat(r1.a) * make_rat(r2.b) - make_rat(r2.a) * make_rat(r1.b);
  if (det == 0) throw std::logic_error("polygon rows are not adjacent");
  RatVertex v;
  v.x = (make_rat(r1.c) * make_rat(r2.b) - make_rat(r2.c) * make_rat(r1.b)) / det;
  v.y = (make_rat(r1.a) * make_rat(r2.c) - make_rat(r2.a) * make_rat(r1.c)) / det;
  return v;
}

}  // namespace

PolygonHRep hull_hrep_2d(const LatticeSet& v) {
  if (v.dim() != 2) throw std::invalid_argument("hull_hrep_2d: ambient dimension must be 2");
  if (dim_of(v) < 2) throw std::invalid_argument("hull_hrep_2d: point set is not two-dimensional");
  const auto hull = graham_hull(v.points());
  PolygonHRep rep;
  const std::size_t m = hull.size();
  for (std::size_t j = 0; j < m; ++j) {
    const auto& p = hull[j];
    const auto& q = hull[(j + 1) % m];
    const long long ex = q[0] - p[0];
    const long long ey = q[1] - p[1];
    const long long g = gcd_ll(std::abs(ey), std::abs(ex));
    PolygonRow row;
    row.a = ey / g;
    row.b = -ex / g;
    row.c = row.a * p[0] + row.b * p[1];
    rep.rows.push_back(row);
  }
  return rep;
}

PolygonHRep move_out(const PolygonHRep& p) {
  std::vector<PolygonRow> rows = p.rows;
  for (auto& row : rows) ++row.c;
  // Strip rows implied by the rest; one LP each.
  for (std::size_t i = 0; i < rows.size();) {
    std::vector<LinearConstraint> others;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      others.push_back(make_le({make_rat(rows[j].a), make_rat(rows[j].b)}, make_rat(rows[j].c)));
    }
    const auto lp = lp_optimize(others, 2, {make_rat(rows[i].a), make_rat(rows[i].b)},
                                LpSense::Maximize);
    if (lp.status == LpStatus::Optimal && lp.value <= make_rat(rows[i].c)) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (rows.size() < 3) throw std::logic_error("move_out: degenerate polygon");
  return PolygonHRep{std::move(rows)};
}

ObserverCycle observers_2d(const LatticeSet& v) {
  const PolygonHRep rep = move_out(hull_hrep_2d(v));
  const std::size_t m = rep.rows.size();
  std::vector<RatVertex> verts;
  verts.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    // vertex between edge j and edge j+1
    verts.push_back(vertex_of(rep.rows[j], rep.rows[(j + 1) % m]));
  }

  std::vector<LatticePoint> boundary;
  auto push = [&](LatticePoint p) {
    if (!boundary.empty() && boundary.back() == p) return;
    boundary.push_back(std::move(p));
  };
  for (std::size_t j = 0; j < m; ++j) {
    // Edge j runs from verts[j-1] to verts[j] along a x + b y = c.
    const auto& from = verts[(j + m - 1) % m];
    const auto& to = verts[j];
    const auto& row = rep.rows[j];
    const auto [s, t] = ext_gcd_pair(row.a, row.b);
    const long long x0 = s * row.c;
    const long long y0 = t * row.c;
    // Lattice direction along the ccw edge is (-b, a).
    Rat k_from, k_to;
    if (row.b != 0) {
      k_from = (make_rat(x0) - from.x) / make_rat(row.b);
      k_to = (make_rat(x0) - to.x) / make_rat(row.b);
    } else {
      k_from = (from.y - make_rat(y0)) / make_rat(row.a);
      k_to = (to.y - make_rat(y0)) / make_rat(row.a);
    }
    const long long klo = ceil_ll(k_from);
    const long long khi = floor_ll(k_to);
    for (long long k = klo; k <= khi; ++k) {
      push(LatticePoint{x0 - k * row.b, y0 + k * row.a});
    }
  }
  if (boundary.size() > 1 && boundary.front() == boundary.back()) boundary.pop_back();
  if (boundary.empty()) throw std::logic_error("observers_2d: empty boundary walk");

  const auto min_it = std::min_element(boundary.begin(), boundary.end());
  std::rotate(boundary.begin(), min_it, boundary.end());
  return ObserverCycle{std::move(boundary)};
}

std::vector<Arc> maximal_arcs(const LatticeSet& x, const ObserverCycle& cycle) {
  const int n = static_cast<int>(cycle.points.size());
  if (n == 0) throw std::invalid_argument("maximal_arcs: empty cycle");
  const auto hull = to_rat_points(x.points());
  std::vector<Arc> raw;
  for (int r = 0; r < n; ++r) {
    int s = 0;
    while (s < n - 1) {
      const auto& endpoint = cycle.points[(r + s + 1) % n];
      if (segment_hits_hull(to_rat_point(cycle.points[r]), to_rat_point(endpoint), hull)) {
        break;
      }
      ++s;
    }
    if (s == n - 1) {
      throw std::logic_error(
          "maximal_arcs: one arc spans the whole cycle (set cannot be full-dimensional)");
    }
    raw.push_back(Arc{r, s});
  }
  std::vector<Arc> keep;
  for (int i = 0; i < n; ++i) {
    bool contained = false;
    for (int j = 0; j < n && !contained; ++j) {
      if (j == i) continue;
      const int offset = (raw[i].start - raw[j].start + n) % n;
      if (offset + raw[i].len <= raw[j].len) contained = true;
    }
    if (!contained) keep.push_back(raw[i]);
  }
#ifndef NDEBUG
  for (const auto& arc : keep) {
    std::vector<LatticePoint> pts;
    for (int s = 0; s <= arc.len; ++s) pts.push_back(cycle.points[(arc.start + s) % n]);
    if (!separable(to_rat_points(x.points()), pts)) {
      throw std::logic_error("maximal_arcs: chord criterion disagrees with the LP oracle");
    }
  }
#endif
  return keep;
}

CircularCoverResult min_circular_cover(const std::vector<Arc>& arcs, int n) {
  if (n <= 0) throw std::invalid_argument("min_circular_cover: empty cycle");
  if (arcs.empty()) throw std::runtime_error("min_circular_cover: no arcs");
  std::vector<char> covered(n, 0);
  for (const auto& a : arcs) {
    for (int s = 0; s <= std::min(a.len, n - 1); ++s) covered[(a.start + s) % n] = 1;
  }
  for (int p = 0; p < n; ++p) {
    if (!covered[p]) throw std::runtime_error("min_circular_cover: position not coverable");
  }
  for (const auto& a : arcs) {
    if (a.len >= n - 1) return {1, {a}};
  }

  CircularCoverResult best;
  best.k = n + 1;
  for (const auto& first : arcs) {
    std::vector<Arc> chosen = {first};
    // Absolute positions from first.start; everything < target still uncovered.
    long long end = first.start + first.len;
    const long long target = first.start + n - 1;
    while (end < target && static_cast<int>(chosen.size()) < best.k) {
      const long long p = end + 1;
      long long best_reach = -1;
      const Arc* pick = nullptr;
      for (const auto& a : arcs) {
        const long long off = ((p - a.start) % n + n) % n;
        if (off > a.len) continue;  // does not cover p
        const long long reach = p + (a.len - off);
        if (reach > best_reach) {
          best_reach = reach;
          pick = &a;
        }
      }
      chosen.push_back(*pick);
      end = best_reach;
    }
    if (end >= target && static_cast<int>(chosen.size()) < best.k) {
      best.k = static_cast<int>(chosen.size());
      best.chosen = std::move(chosen);
    }
  }
  return best;
}

LatticeSet lattice_hull_points_2d(const LatticeSet& v) {
  const auto result = lattice_points(to_hpoly(hull_hrep_2d(v)));
  return result.points;
}

Rc2dResult rc_2d(const LatticeSet& v) {
  if (v.dim() != 2) throw std::invalid_argument("rc_2d: ambient dimension must be 2");
  if (dim_of(v) < 2) throw std::invalid_argument("rc_2d: point set is not two-dimensional");
  Rc2dResult out;
  const LatticeSet x = lattice_hull_points_2d(v);
  out.observers = observers_2d(v);
  out.arcs = maximal_arcs(x, out.observers);
  const int n = static_cast<int>(out.observers.points.size());
  const auto cover = min_circular_cover(out.arcs, n);
  out.k = cover.k;

  const auto inner = to_rat_points(x.points());
  out.cert.k = cover.k;
  for (const auto& arc : cover.chosen) {
    std::vector<LatticePoint> pts;
    for (int s = 0; s <= arc.len; ++s) pts.push_back(out.observers.points[(arc.start + s) % n]);
    auto ineq = separable(inner, pts);
    if (!ineq) throw std::logic_error("rc_2d: chosen arc is not separable");
    out.cert.inequalities.push_back(std::move(*ineq));
  }
  std::vector<LatticePoint> sorted_obs = out.observers.points;
  std::sort(sorted_obs.begin(), sorted_obs.end());
  for (const auto& y : sorted_obs) {
    int assigned = -1;
    for (int i = 0; i < out.cert.k; ++i) {
      if (out.cert.inequalities[i].strictly_violated_by(y)) {
        assigned = i;
        break;
      }
    }
    if (assigned < 0) throw std::logic_error("rc_2d: observer not cut by the chosen cover");
    out.cert.assignment.emplace_back(y, assigned);
  }
  return out;
}

}  // namespace rcx
