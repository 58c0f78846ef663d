#include "rcx/polyhedron.hpp"

#include "rcx/lp.hpp"

#include <stdexcept>

namespace rcx {

Rat Inequality::eval(const LatticePoint& x) const {
  Rat v(0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (x[k] != 0) v += a[k] * make_rat(x[k]);
  }
  return v;
}

Rat Inequality::eval(const RatPoint& x) const {
  Rat v(0);
  for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * x[k];
  return v;
}

namespace {

constexpr unsigned long long kEnumerationCap = 50'000'000ull;

std::vector<LinearConstraint> as_constraints(const HPolyhedron& p) {
  std::vector<LinearConstraint> cs;
  cs.reserve(p.rows.size());
  for (const auto& row : p.rows) {
    if (static_cast<int>(row.a.size()) != p.dim) {
      throw std::invalid_argument("HPolyhedron: row dimension mismatch");
    }
    cs.push_back(make_le(row.a, row.b));
  }
  return cs;
}

}  // namespace

LatticePointsResult lattice_points(const HPolyhedron& p) {
  if (p.dim <= 0) throw std::invalid_argument("lattice_points: dimension must be positive");
  const auto cs = as_constraints(p);

  LatticePoint lo(p.dim), hi(p.dim);
  for (int k = 0; k < p.dim; ++k) {
    std::vector<Rat> obj(p.dim, Rat(0));
    obj[k] = 1;
    const auto mx = lp_optimize(cs, p.dim, obj, LpSense::Maximize);
    if (mx.status == LpStatus::Infeasible) {
      return {true, LatticeSet(p.dim, {})};
    }
    if (mx.status == LpStatus::Unbounded) return {false, {}};
    const auto mn = lp_optimize(cs, p.dim, obj, LpSense::Minimize);
    if (mn.status == LpStatus::Unbounded) return {false, {}};
    hi[k] = floor_ll(mx.value);
    lo[k] = ceil_ll(mn.value);
    if (lo[k] > hi[k]) return {true, LatticeSet(p.dim, {})};
  }

  unsigned long long volume = 1;
  for (int k = 0; k < p.dim; ++k) {
    const unsigned long long side = static_cast<unsigned long long>(hi[k] - lo[k]) + 1;
    if (volume > kEnumerationCap / side) {
      throw std::runtime_error("lattice_points: integer bounding box too large to enumerate");
    }
    volume *= side;
  }

  std::vector<LatticePoint> found;
  LatticePoint q = lo;
  for (;;) {
    bool inside = true;
    for (const auto& row : p.rows) {
      if (!row.satisfied_by(q)) {
        inside = false;
        break;
      }
    }
    if (inside) found.push_back(q);
    int k = p.dim - 1;
    for (; k >= 0; --k) {
      if (q[k] < hi[k]) {
        ++q[k];
        break;
      }
      q[k] = lo[k];
    }
    if (k < 0) break;
  }
  return {true, LatticeSet(p.dim, std::move(found))};
}

}  // namespace rcx
