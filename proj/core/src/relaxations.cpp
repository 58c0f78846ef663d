#include "rcx/relaxations.hpp"

#include <stdexcept>

namespace rcx {

VerifyResult verify_relaxation(const HPolyhedron& q, const LatticeSet& x) {
  if (q.dim != x.dim()) throw std::invalid_argument("verify_relaxation: dimension mismatch");
  for (const auto& p : x.points()) {
    for (const auto& row : q.rows) {
      if (!row.satisfied_by(p)) return {VerifyStatus::Fails, p};
    }
  }
  const auto lat = lattice_points(q);
  if (!lat.bounded) return {VerifyStatus::Unbounded, std::nullopt};
  for (const auto& p : lat.points.points()) {
    if (!x.contains(p)) return {VerifyStatus::Fails, p};
  }
  // X subset of Q and Q's lattice points subset of X: equality.
  return {VerifyStatus::Verified, std::nullopt};
}

HPolyhedron box_simplex(int l, long long b) {
  if (l < 0) throw std::invalid_argument("box_simplex: l must be >= 0");
  if (b < 1) throw std::invalid_argument("box_simplex: b must be >= 1");
  const int d = l + 1;
  const Rat base = make_rat(b + 1);
  // inv[i] = (b+1)^-i for i = 1..d
  std::vector<Rat> inv(d + 1, Rat(1));
  for (int i = 1; i <= d; ++i) inv[i] = inv[i - 1] / base;

  HPolyhedron p;
  p.dim = d;
  for (int k = 1; k <= l; ++k) {
    Inequality row;
    row.a.assign(d, Rat(0));
    row.a[k - 1] = 1;
    for (int i = k + 1; i <= d; ++i) row.a[i - 1] = -inv[i];
    row.b = 1;
    p.rows.push_back(std::move(row));
  }
  {
    Inequality row;
    row.a.assign(d, Rat(0));
    row.a[d - 1] = 1;
    row.b = make_rat(b);
    p.rows.push_back(std::move(row));
  }
  {
    // x_1 + sum (b+1)^-i x_i >= 0, stored as <=.
    Inequality row;
    row.a.assign(d, Rat(0));
    row.a[0] = -1;
    for (int i = 2; i <= d; ++i) row.a[i - 1] = -inv[i];
    row.b = 0;
    p.rows.push_back(std::move(row));
  }
  return p;
}

long long box_rc(long long k, long long l) {
  if (k < 1) throw std::invalid_argument("box_rc: k must be >= 1");
  if (l < 0) throw std::invalid_argument("box_rc: l must be >= 0");
  return 2 * k + l;
}

HPolyhedron cross_relaxation(int d) {
  HPolyhedron p;
  p.dim = d;
  if (d == 3) {
    const long long rows[4][4] = {
        {8, 12, -13, 13},
        {-8, -12, -13, 13},
        {12, -8, 13, 13},
        {-12, 8, 13, 13},
    };
    for (const auto& r : rows) {
      p.rows.push_back(Inequality{{make_rat(r[0]), make_rat(r[1]), make_rat(r[2])},
                                  make_rat(r[3])});
    }
  } else if (d == 4) {
    const long long rows[5][5] = {
        {6, -7, -7, -5, 7},
        {-7, 3, -2, -7, 7},
        {9, 7, 9, -4, 9},
        {1, 2, -2, 2, 2},
        {-6, -6, 5, 2, 6},
    };
    for (const auto& r : rows) {
      p.rows.push_back(Inequality{
          {make_rat(r[0]), make_rat(r[1]), make_rat(r[2]), make_rat(r[3])}, make_rat(r[4])});
    }
  } else {
    throw std::invalid_argument("cross_relaxation: only d = 3 and d = 4 are available");
  }
  return p;
}

HPolyhedron cross_lift(const HPolyhedron& a) {
  const int d = a.dim;
  HPolyhedron normalized;
  normalized.dim = d;
  for (const auto& row : a.rows) {
    if (row.b <= 0) {
      throw std::invalid_argument("cross_lift: row with nonpositive rhs cannot be normalized");
    }
    Inequality r;
    r.a.reserve(d);
    for (const auto& c : row.a) r.a.push_back(c / row.b);
    r.b = 1;
    normalized.rows.push_back(std::move(r));
  }
  if (verify_relaxation(normalized, cross_set(d)).status != VerifyStatus::Verified) {
    throw std::invalid_argument("cross_lift: input is not a relaxation of the crosspolytope");
  }

  HPolyhedron lifted;
  lifted.dim = d + 1;
  for (const auto& row : normalized.rows) {
    Inequality r;
    r.a = row.a;
    r.a.push_back(-row.a[0]);  // A (x - y e_1) <= 1
    r.b = 1;
    lifted.rows.push_back(std::move(r));
  }
  {
    Inequality r;
    r.a.assign(d + 1, Rat(0));
    r.a[0] = 1;
    r.a[d] = 1;
    r.b = 1;
    lifted.rows.push_back(r);  // x_1 + y <= 1
    for (auto& c : r.a) c = -c;
    lifted.rows.push_back(std::move(r));  // -(x_1 + y) <= 1
  }
  return lifted;
}

IterativeResult iterative_rc(const LatticeSet& x, const LatticeSet& y0,
                             long long verify_box_t, int max_rounds,
                             const RcOptions& opts) {
  if (verify_box_t < 1) throw std::invalid_argument("iterative_rc: box bound must be >= 1");
  if (max_rounds < 1) throw std::invalid_argument("iterative_rc: need at least one round");
  const int d = x.dim();
  IterativeResult out;
  LatticeSet y = y0;
  for (int round = 1; round <= max_rounds; ++round) {
    out.rounds = round;
    const auto rc = rc_finite(x, y, opts);
    out.k = rc.k;
    HPolyhedron q;
    q.dim = d;
    q.rows = rc.cert.inequalities;

    HPolyhedron boxed = q;
    for (int k = 0; k < d; ++k) {
      std::vector<Rat> e(d, Rat(0));
      e[k] = 1;
      boxed.rows.push_back(Inequality{e, make_rat(verify_box_t)});
      for (auto& c : e) c = -c;
      boxed.rows.push_back(Inequality{std::move(e), make_rat(verify_box_t)});
    }
    const auto in_box = lattice_points(boxed);
    LatticeSet violated = in_box.points.minus(x);
    if (violated.empty()) {
      const auto full = lattice_points(q);
      if (full.bounded && full.points == x) {
        out.converged = true;
        out.relaxation = std::move(q);
        out.final_outer = std::move(y);
        return out;
      }
      if (full.bounded) violated = full.points.minus(x);
    }
    if (violated.empty()) break;  // no harvestable progress; k stays a lower bound
    const auto grown = y.united(violated);
    if (grown == y) break;
    y = grown;
  }
  out.final_outer = std::move(y);
  return out;
}

}  // namespace rcx
