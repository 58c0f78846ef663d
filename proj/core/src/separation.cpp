#include "rcx/separation.hpp"

#include "rcx/bounds.hpp"
#include "rcx/geometry.hpp"
#include "rcx/lp.hpp"
#include "rcx/rc2d.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rcx {

namespace {

int instance_dim(const SeparationInstance& inst) {
  if (inst.inner.empty()) throw std::invalid_argument("separation: empty inner set");
  const int d = inst.dim;
  for (const auto& p : inst.inner) {
    if (static_cast<int>(p.size()) != d) {
      throw std::invalid_argument("separation: inner dimension mismatch");
    }
  }
  for (const auto& p : inst.outer) {
    if (static_cast<int>(p.size()) != d) {
      throw std::invalid_argument("separation: outer dimension mismatch");
    }
  }
  return d;
}

}  // namespace

bool validate_certificate(const std::vector<RatPoint>& inner,
                          const std::vector<LatticePoint>& outer,
                          const SeparationCertificate& cert) {
  if (cert.k != static_cast<int>(cert.inequalities.size())) return false;
  for (const auto& ineq : cert.inequalities) {
    for (const auto& x : inner) {
      if (!ineq.satisfied_by(x)) return false;
    }
  }
  if (cert.assignment.size() != outer.size()) return false;
  std::vector<LatticePoint> assigned;
  for (const auto& [y, idx] : cert.assignment) {
    if (idx < 0 || idx >= cert.k) return false;
    if (!cert.inequalities[idx].strictly_violated_by(y)) return false;
    assigned.push_back(y);
  }
  std::sort(assigned.begin(), assigned.end());
  std::vector<LatticePoint> expected = outer;
  std::sort(expected.begin(), expected.end());
  return assigned == expected;
}

std::optional<Inequality> separable(const std::vector<RatPoint>& inner,
                                    const std::vector<LatticePoint>& outer_subset) {
  if (inner.empty()) throw std::invalid_argument("separable: empty inner set");
  if (outer_subset.empty()) throw std::invalid_argument("separable: empty subset");
  const int d = static_cast<int>(inner[0].size());
  for (const auto& y : outer_subset) {
    if (static_cast<int>(y.size()) != d) {
      throw std::invalid_argument("separable: dimension mismatch");
    }
  }
  // Variables (a, b): a.x - b <= 0 on inner, a.y - b >= 1 on the subset.
  std::vector<LinearConstraint> cs;
  cs.reserve(inner.size() + outer_subset.size());
  for (const auto& x : inner) {
    std::vector<Rat> row(d + 1);
    for (int k = 0; k < d; ++k) row[k] = x[k];
    row[d] = -1;
    cs.push_back(make_le(std::move(row), Rat(0)));
  }
  for (const auto& y : outer_subset) {
    std::vector<Rat> row(d + 1);
    for (int k = 0; k < d; ++k) row[k] = make_rat(y[k]);
    row[d] = -1;
    cs.push_back(make_ge(std::move(row), Rat(1)));
  }
  const auto lp = lp_feasible(cs, d + 1);
  if (!lp.feasible) return std::nullopt;
  Inequality ineq;
  ineq.a.assign(lp.witness.begin(), lp.witness.begin() + d);
  ineq.b = lp.witness[d];
  return ineq;
}

std::vector<LatticePoint> maximal_separable(const std::vector<RatPoint>& inner,
                                            const std::vector<LatticePoint>& universe,
                                            const std::vector<LatticePoint>& seed) {
  std::vector<LatticePoint> current = seed;
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  if (!separable(inner, current)) {
    throw std::invalid_argument("maximal_separable: seed is not separable");
  }
  std::vector<LatticePoint> order = universe;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (const auto& u : order) {
    if (std::binary_search(current.begin(), current.end(), u)) continue;
    auto trial = current;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), u), u);
    if (separable(inner, trial)) current = std::move(trial);
  }
  return current;
}

std::vector<LatticePoint> domination_frontier(const std::vector<RatPoint>& inner,
                                              const std::vector<LatticePoint>& outer) {
  std::vector<LatticePoint> pts = outer;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 2) return pts;
  // inside[i][j]: pts[i] in conv(inner + {pts[j]}).
  std::vector<std::vector<char>> inside(n, std::vector<char>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    auto hull = inner;
    hull.push_back(to_rat_point(pts[j]));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      if (conv_membership(to_rat_point(pts[i]), hull)) inside[i][j] = 1;
    }
  }
  std::vector<LatticePoint> kept;
  for (std::size_t j = 0; j < n; ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < n && !dominated; ++i) {
      if (i != j && inside[i][j] && !inside[j][i]) dominated = true;
    }
    if (!dominated) kept.push_back(pts[j]);
  }
  return kept;
}

namespace {

struct CoverClass {
  std::vector<int> members;  // sorted indices into the solver universe
  Inequality ineq;
};

// Exact minimum cover of the universe by jointly separable classes. A cover
// can always be normalized to a partition (separable sets are closed under
// subsets), so the search looks for a partition: points are placed into at
// most k classes in a most-constrained-first order, each placement checked
// against the hiding pairs and then against the joint separation LP. k
// starts at the clique / chromatic lower bound and grows until a partition
// exists, which makes the first successful k the exact optimum.
class CoverSolver {
 public:
  CoverSolver(std::vector<RatPoint> inner, std::vector<LatticePoint> pts,
              const RcOptions& opts)
      : inner_(std::move(inner)), pts_(std::move(pts)), opts_(opts) {
    n_ = pts_.size();
    for (const auto& y : pts_) {
      if (conv_membership(to_rat_point(y), inner_)) {
        throw std::runtime_error(
            "separation: an outer point lies in the hull of the inner set; "
            "no strict separation exists");
      }
    }
    graph_ = hiding_graph_over(inner_, pts_, opts_.jobs);
    // hiding_graph_over sorts identically (lex), so indices line up.
  }

  std::vector<CoverClass> solve() {
    if (n_ == 0) return {};
    int k = max_clique(graph_).size;
    if (opts_.chromatic_root_bound) k = std::max(k, chromatic_root_bound());
    k = std::max(k, 1);
    for (; k <= static_cast<int>(n_); ++k) {
      classes_.clear();
      assigned_.assign(n_, -1);
      if (place_next(k)) {
        std::vector<CoverClass> out;
        for (const auto& c : classes_) {
          if (c.members.empty()) continue;
          out.push_back(CoverClass{c.members, *sep(c.members)});
        }
        return out;
      }
    }
    throw std::logic_error("cover search failed; singletons are always separable");
  }

 private:
  struct PartialClass {
    std::vector<int> members;
  };

  // References stay valid: the cache is a node-based map and never erased.
  const std::optional<Inequality>& sep(const std::vector<int>& sorted_members) {
    auto it = cache_.find(sorted_members);
    if (it != cache_.end()) return it->second;
    std::vector<LatticePoint> subset;
    subset.reserve(sorted_members.size());
    for (int i : sorted_members) subset.push_back(pts_[i]);
    auto result = separable(inner_, subset);
    return cache_.emplace(sorted_members, std::move(result)).first->second;
  }

  // Extension test that avoids the LP whenever the current class witness
  // already cuts the candidate strictly: rescaling restores the unit margin.
  bool sep_extended(const std::vector<int>& members, int u) {
    const auto key = with_member(members, u);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second.has_value();
    const Inequality witness = *sep(members);
    const Rat margin = witness.eval(pts_[u]) - witness.b;
    if (margin > 0) {
      Inequality scaled = witness;
      if (margin < 1) {
        for (auto& c : scaled.a) c /= margin;
        scaled.b /= margin;
      }
      cache_.emplace(key, std::move(scaled));
      return true;
    }
    return sep(key).has_value();
  }

  static std::vector<int> with_member(const std::vector<int>& members, int u) {
    std::vector<int> out = members;
    out.insert(std::lower_bound(out.begin(), out.end(), u), u);
    return out;
  }

  bool pair_ok(int u, const std::vector<int>& members) const {
    for (int v : members) {
      if (graph_.adj[u][v]) return false;
    }
    return true;
  }

  // Most-constrained unassigned point: most distinct classes among its
  // hiding neighbors, ties by degree, then by index.
  int pick_point() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (assigned_[v] >= 0) continue;
      std::vector<char> seen(classes_.size(), 0);
      int sat = 0, deg = 0;
      for (std::size_t u = 0; u < n_; ++u) {
        if (!graph_.adj[v][u]) continue;
        ++deg;
        const int c = assigned_[u];
        if (c >= 0 && !seen[c]) {
          seen[c] = 1;
          ++sat;
        }
      }
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = static_cast<int>(v);
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool place_next(int k) {
    const int v = pick_point();
    if (v < 0) return true;  // everything assigned
    const int open = static_cast<int>(classes_.size());
    for (int c = 0; c < open; ++c) {
      if (!pair_ok(v, classes_[c].members)) continue;
      if (!sep_extended(classes_[c].members, v)) continue;
      classes_[c].members = with_member(classes_[c].members, v);
      assigned_[v] = c;
      if (place_next(k)) return true;
      assigned_[v] = -1;
      auto& members = classes_[c].members;  // recursion may reallocate classes_
      members.erase(std::find(members.begin(), members.end(), v));
    }
    if (open < k) {
      classes_.push_back(PartialClass{{v}});
      assigned_[v] = open;
      if (place_next(k)) return true;
      assigned_[v] = -1;
      classes_.pop_back();
    }
    return false;
  }

  int chromatic_root_bound() {
    std::vector<int> verts(n_);
    for (std::size_t i = 0; i < n_; ++i) verts[i] = static_cast<int>(i);
    if (static_cast<int>(n_) > opts_.chromatic_cap) {
      std::vector<int> degree(n_, 0);
      for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = 0; v < n_; ++v) degree[u] += graph_.adj[u][v];
      }
      std::stable_sort(verts.begin(), verts.end(),
                       [&](int a, int b) { return degree[a] > degree[b]; });
      verts.resize(opts_.chromatic_cap);
      std::sort(verts.begin(), verts.end());
    }
    HidingGraph sub;
    sub.vertices.reserve(verts.size());
    for (int v : verts) sub.vertices.push_back(pts_[v]);
    sub.adj.assign(verts.size(), std::vector<uint8_t>(verts.size(), 0));
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = 0; j < verts.size(); ++j) {
        sub.adj[i][j] = graph_.adj[verts[i]][verts[j]];
      }
    }
    return chromatic_number(sub).chi;  // chi of a subgraph still bounds rc
  }

  std::vector<RatPoint> inner_;
  std::vector<LatticePoint> pts_;
  RcOptions opts_;
  std::size_t n_ = 0;
  HidingGraph graph_;
  std::map<std::vector<int>, std::optional<Inequality>> cache_;
  std::vector<PartialClass> classes_;
  std::vector<int> assigned_;
};

SeparationCertificate build_certificate(const std::vector<CoverClass>& sets,
                                        const std::vector<LatticePoint>& all_outer) {
  SeparationCertificate cert;
  cert.k = static_cast<int>(sets.size());
  for (const auto& s : sets) cert.inequalities.push_back(s.ineq);
  std::vector<LatticePoint> outer = all_outer;
  std::sort(outer.begin(), outer.end());
  outer.erase(std::unique(outer.begin(), outer.end()), outer.end());
  for (const auto& y : outer) {
    int assigned = -1;
    for (int i = 0; i < cert.k; ++i) {
      if (cert.inequalities[i].strictly_violated_by(y)) {
        assigned = i;
        break;
      }
    }
    if (assigned < 0) {
      throw std::logic_error("separation: cover does not dominate an outer point");
    }
    cert.assignment.emplace_back(y, assigned);
  }
  return cert;
}

}  // namespace

RcResult rc_instance(const SeparationInstance& instance, const RcOptions& opts) {
  instance_dim(instance);
  std::vector<LatticePoint> outer = instance.outer;
  std::sort(outer.begin(), outer.end());
  outer.erase(std::unique(outer.begin(), outer.end()), outer.end());
  if (outer.empty()) return {0, SeparationCertificate{}};

  std::vector<LatticePoint> reduced = outer;
  if (opts.domination_reduction &&
      outer.size() <= static_cast<std::size_t>(opts.domination_cap)) {
    reduced = domination_frontier(instance.inner, outer);
  }
  CoverSolver solver(instance.inner, reduced, opts);
  const auto sets = solver.solve();
  auto cert = build_certificate(sets, outer);
  return {cert.k, std::move(cert)};
}

RcResult rc_finite(const LatticeSet& x, const LatticeSet& y, const RcOptions& opts) {
  if (x.dim() != y.dim()) throw std::invalid_argument("rc_finite: dimension mismatch");
  if (!is_lattice_convex(x)) {
    throw std::invalid_argument("rc_finite: X is not lattice-convex");
  }
  SeparationInstance inst;
  inst.dim = x.dim();
  inst.inner = to_rat_points(x.points());
  for (const auto& p : y.points()) {
    if (!x.contains(p)) inst.outer.push_back(p);
  }
  return rc_instance(inst, opts);
}

namespace {

std::vector<RatPoint> eps_inner_points(const LatticeSet& x, const Rat& eps) {
  const int d = x.dim();
  std::vector<RatPoint> inner;
  for (const auto& p : x.points()) {
    RatPoint base = to_rat_point(p);
    inner.push_back(base);
    for (int k = 0; k < d; ++k) {
      RatPoint plus = base, minus = base;
      plus[k] += eps;
      minus[k] -= eps;
      inner.push_back(std::move(plus));
      inner.push_back(std::move(minus));
    }
  }
  std::sort(inner.begin(), inner.end(),
            [](const RatPoint& a, const RatPoint& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                const int c = cmp(a[i], b[i]);
                if (c != 0) return c < 0;
              }
              return false;
            });
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  return inner;
}

bool is_integer_point(const RatPoint& p, LatticePoint* out) {
  LatticePoint q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1) return false;
    q[i] = to_ll(p[i].get_num());
  }
  *out = std::move(q);
  return true;
}

SeparationInstance eps_instance(const LatticeSet& x, const Rat& eps, const LatticeSet& y) {
  if (eps <= 0) throw std::invalid_argument("rc_eps: epsilon must be positive");
  if (x.dim() != y.dim()) throw std::invalid_argument("rc_eps: dimension mismatch");
  SeparationInstance inst;
  inst.dim = x.dim();
  inst.inner = eps_inner_points(x, eps);
  std::vector<LatticePoint> integral_inner;
  for (const auto& p : inst.inner) {
    LatticePoint q;
    if (is_integer_point(p, &q)) integral_inner.push_back(std::move(q));
  }
  std::sort(integral_inner.begin(), integral_inner.end());
  for (const auto& p : y.points()) {
    if (!std::binary_search(integral_inner.begin(), integral_inner.end(), p)) {
      inst.outer.push_back(p);
    }
  }
  return inst;
}

}  // namespace

RcResult rc_eps(const LatticeSet& x, const Rat& eps, const LatticeSet& y,
                const RcOptions& opts) {
  return rc_instance(eps_instance(x, eps, y), opts);
}

namespace {

// Membership in conv(X) + c * [-1,1]^d, one LP per candidate.
bool dilated_membership(const LatticePoint& q, const std::vector<RatPoint>& hull,
                        const Rat& c, int d) {
  const std::size_t n = hull.size();
  // Columns: lambda (n), u' (d) with u = u' - 1 in [-1,1], slack w (d).
  // Rows: sum lambda x + c u' = q + c, sum lambda = 1, u' + w = 2.
  const std::size_t cols = n + 2 * static_cast<std::size_t>(d);
  std::vector<std::vector<Rat>> a(2 * d + 1, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> b(2 * d + 1, Rat(0));
  for (int k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) a[k][i] = hull[i][k];
    a[k][n + k] = c;
    b[k] = make_rat(q[k]) + c;
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  b[d] = 1;
  for (int k = 0; k < d; ++k) {
    a[d + 1 + k][n + k] = 1;
    a[d + 1 + k][n + d + k] = 1;
    b[d + 1 + k] = 2;
  }
  return detail::feasible_nonneg(std::move(a), std::move(b)).has_value();
}

}  // namespace

EpsRegion eps_region(const LatticeSet& x, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("eps_region: epsilon must be positive");
  const int d = x.dim();
  if (dim_of(x) != d) {
    throw std::invalid_argument("eps_region: X must be full-dimensional");
  }
  EpsRegion region;
  region.epsilon = eps;
  Rat pow(1);
  for (int i = 0; i < d - 1; ++i) pow *= eps;
  region.constant = Rat(2) * factorial_rat(d) * make_rat(static_cast<long long>(x.size()) + 1) / pow;

  const long long c_up = ceil_ll(region.constant);
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
  unsigned long long volume = 1;
  for (int k = 0; k < d; ++k) {
    lo[k] -= c_up;
    hi[k] += c_up;
    const unsigned long long side = static_cast<unsigned long long>(hi[k] - lo[k]) + 1;
    if (volume > 200'000'000ull / side) {
      throw std::runtime_error("eps_region: certificate region too large to enumerate");
    }
    volume *= side;
  }
  const auto hull = to_rat_points(x.points());
  std::vector<LatticePoint> members;
  LatticePoint q = lo;
  for (;;) {
    if (dilated_membership(q, hull, region.constant, d)) members.push_back(q);
    int k = d - 1;
    for (; k >= 0; --k) {
      if (q[k] < hi[k]) {
        ++q[k];
        break;
      }
      q[k] = lo[k];
    }
    if (k < 0) break;
  }
  region.certificate_set = LatticeSet(d, std::move(members));
  return region;
}

namespace {

// Integer points of conv(inner) for d <= 2, by bounding box + membership.
std::vector<LatticePoint> hull_integer_points(const std::vector<RatPoint>& inner, int d) {
  LatticePoint lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    Rat mn = inner[0][k], mx = inner[0][k];
    for (const auto& p : inner) {
      if (p[k] < mn) mn = p[k];
      if (p[k] > mx) mx = p[k];
    }
    lo[k] = ceil_ll(mn);
    hi[k] = floor_ll(mx);
  }
  std::vector<LatticePoint> out;
  LatticePoint q = lo;
  for (;;) {
    if (conv_membership(to_rat_point(q), inner)) out.push_back(q);
    int k = d - 1;
    for (; k >= 0; --k) {
      if (q[k] < hi[k]) {
        ++q[k];
        break;
      }
      q[k] = lo[k];
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace

RcEpsFullResult rc_eps_full(const LatticeSet& x, const Rat& eps, const RcOptions& opts) {
  if (eps <= 0) throw std::invalid_argument("rc_eps_full: epsilon must be positive");
  const int d = x.dim();
  if (dim_of(x) != d) {
    throw std::invalid_argument("rc_eps_full: X must be full-dimensional");
  }
  Rat pow(1);
  for (int i = 0; i < d - 1; ++i) pow *= eps;
  const Rat constant =
      Rat(2) * factorial_rat(d) * make_rat(static_cast<long long>(x.size()) + 1) / pow;

  if (d <= 2 && constant >= eps) {
    SeparationInstance inst;
    inst.dim = d;
    inst.inner = eps_inner_points(x, eps);

    const auto w_points = hull_integer_points(inst.inner, d);
    std::vector<LatticePoint> integral_inner;
    for (const auto& p : inst.inner) {
      LatticePoint q;
      if (is_integer_point(p, &q)) integral_inner.push_back(std::move(q));
    }
    std::sort(integral_inner.begin(), integral_inner.end());
    for (const auto& w : w_points) {
      if (!std::binary_search(integral_inner.begin(), integral_inner.end(), w)) {
        throw std::runtime_error(
            "rc_eps_full: an integer point other than the inner set lies in its hull; "
            "no strict separation exists for this epsilon");
      }
    }

    // Frontier: every region point outside the hull is dominated by one of
    // the boundary observers of the hull's integer points, so covering the
    // frontier covers the whole certificate region.
    std::vector<LatticePoint> frontier;
    if (d == 1) {
      frontier = {{w_points.front()[0] - 1}, {w_points.back()[0] + 1}};
    } else {
      const LatticeSet w_set(2, w_points);
      frontier = observers_2d(w_set).points;
    }
    const auto hull = to_rat_points(x.points());
    bool all_in_region = true;
    for (const auto& f : frontier) {
      if (!dilated_membership(f, hull, constant, d)) {
        all_in_region = false;
        break;
      }
    }
    if (all_in_region) {
      inst.outer = std::move(frontier);
      auto result = rc_instance(inst, opts);
      return {result.k, std::move(result.cert), constant};
    }
  }

  const auto region = eps_region(x, eps);
  auto result = rc_eps(x, eps, region.certificate_set, opts);
  return {result.k, std::move(result.cert), constant};
}

}  // namespace rcx
