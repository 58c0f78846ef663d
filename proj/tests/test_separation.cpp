#include "rcx/separation.hpp"

#include "rcx/geometry.hpp"
#include "rcx/lattice_set.hpp"

#include <doctest.h>

#include "test_oracles.hpp"

#include <random>

using namespace rcx;

namespace {

std::vector<LatticePoint> outer_of(const LatticeSet& x, const LatticeSet& y) {
  std::vector<LatticePoint> out;
  for (const auto& p : y.points()) {
    if (!x.contains(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("separable: triangle vs its far corner") {
  const auto ineq = separable(to_rat_points(simplex_set(2).points()), {{1, 1}});
  REQUIRE(ineq.has_value());
  for (const auto& x : simplex_set(2).points()) CHECK(ineq->satisfied_by(x));
  CHECK(ineq->eval(LatticePoint{1, 1}) >= ineq->b + 1);
}

TEST_CASE("separable: square vs pinching pair is impossible") {
  const auto square = box_set({{0, 1}, {0, 1}});
  CHECK_FALSE(separable(to_rat_points(square.points()), {{2, 0}, {0, 2}}));
}

TEST_CASE("separable: certificate points 0 and 5 pinch the simplex") {
  // (0,1,1) and (0,0,-1) form a hiding pair; the segment meets the hull.
  const auto d3 = simplex_set(3);
  CHECK(segment_hits_hull(LatticePoint{0, 1, 1}, LatticePoint{0, 0, -1}, d3.points()));
  CHECK_FALSE(separable(to_rat_points(d3.points()), {{0, 1, 1}, {0, 0, -1}}));
}

TEST_CASE("separable agrees with the hull-intersection oracle") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> coord(-2, 3);
  const auto square = box_set({{0, 1}, {0, 1}});
  const auto inner = to_rat_points(square.points());
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<LatticePoint> subset;
    for (int i = 0; i < m; ++i) {
      LatticePoint p{coord(rng), coord(rng)};
      if (!square.contains(p)) subset.push_back(p);
    }
    if (subset.empty()) continue;
    const bool lp = separable(inner, subset).has_value();
    const bool brute = oracle::separable(inner, oracle::rat_points(subset));
    CHECK(lp == brute);
  }
}

TEST_CASE("maximal_separable extends the seed deterministically") {
  const auto square = box_set({{0, 1}, {0, 1}});
  const auto inner = to_rat_points(square.points());

  CHECK(maximal_separable(inner, {{2, 0}}, {{2, 0}}) ==
        std::vector<LatticePoint>{{2, 0}});

  // (0,2) is blocked by (2,0) but (2,1) is compatible.
  const auto grown = maximal_separable(inner, {{2, 0}, {2, 1}, {0, 2}}, {{2, 0}});
  CHECK(grown == std::vector<LatticePoint>{{2, 0}, {2, 1}});
  // brute-force: {(2,0),(2,1)} separable, adding (0,2) never is
  CHECK(oracle::separable(inner, oracle::rat_points({{2, 0}, {2, 1}})));
  CHECK_FALSE(oracle::separable(inner, oracle::rat_points({{2, 0}, {0, 2}})));

  CHECK_THROWS_AS(maximal_separable(inner, {{2, 0}}, {{2, 0}, {0, 2}}),
                  std::invalid_argument);
}

TEST_CASE("maximal_separable result is maximal") {
  const auto x = simplex_set(2);
  const auto inner = to_rat_points(x.points());
  const auto universe = outer_of(x, ball(x, 2));
  const auto result = maximal_separable(inner, universe, {universe.front()});
  for (const auto& u : universe) {
    if (std::binary_search(result.begin(), result.end(), u)) continue;
    auto trial = result;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), u), u);
    CHECK_FALSE(separable(inner, trial).has_value());
  }
}

TEST_CASE("rc_finite on the unit square against the unit ball") {
  const auto square = box_set({{0, 1}, {0, 1}});
  const auto y = ball(square, 1);
  const auto result = rc_finite(square, y);
  // Brute force over labelings of the five outer points: two inequalities
  // suffice (e.g. -2x-y <= 0 and -x-2y <= 0) and one cannot.
  const int brute = oracle::min_cover(to_rat_points(square.points()), outer_of(square, y), 3);
  CHECK(brute == 2);
  CHECK(result.k == brute);
  CHECK(validate_certificate(to_rat_points(square.points()), outer_of(square, y), result.cert));
}

TEST_CASE("rc_finite on the simplex certificate set is exactly four") {
  const auto d3 = simplex_set(3);
  const auto result = rc_finite(d3, delta3_certificate());
  CHECK(result.k == 4);
  CHECK(validate_certificate(to_rat_points(d3.points()),
                             outer_of(d3, delta3_certificate()), result.cert));
}

TEST_CASE("rc_finite is zero when the outer set is empty") {
  const auto square = box_set({{0, 1}, {0, 1}});
  const auto result = rc_finite(square, LatticeSet(2, {{0, 0}, {1, 1}}));
  CHECK(result.k == 0);
  CHECK(result.cert.inequalities.empty());
}

TEST_CASE("rc_finite rejects sets that are not lattice-convex") {
  CHECK_THROWS_AS(rc_finite(LatticeSet(2, {{0, 0}, {2, 0}}), ball(simplex_set(2), 1)),
                  std::invalid_argument);
}

TEST_CASE("rc_finite is monotone in the outer set") {
  for (const auto& x : {box_set({{0, 1}, {0, 1}}), simplex_set(2), cross_set(2)}) {
    const int k1 = rc_finite(x, ball(x, 1)).k;
    const int k2 = rc_finite(x, ball(x, 2)).k;
    CHECK(k1 <= k2);
  }
}

TEST_CASE("rc_finite is unimodular invariant") {
  const auto square = box_set({{0, 1}, {0, 1}});
  const auto y = ball(square, 2);
  const int base = rc_finite(square, y).k;
  for (const auto& u : oracle::unimodular_samples(2)) {
    const LatticePoint shift{-1, 2};
    const auto moved_x = oracle::apply_unimodular(u, square, shift);
    const auto moved_y = oracle::apply_unimodular(u, y, shift);
    CHECK(rc_finite(moved_x, moved_y).k == base);
  }
}

TEST_CASE("domination reduction never changes the value") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> coord(-3, 3);
  RcOptions with_reduction;
  RcOptions without_reduction;
  without_reduction.domination_reduction = false;
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = trial % 2 ? simplex_set(2) : box_set({{0, 1}, {0, 1}});
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 6; ++i) {
      LatticePoint p{coord(rng), coord(rng)};
      pts.push_back(p);
    }
    const LatticeSet y(2, pts);
    CHECK(rc_finite(x, y, with_reduction).k == rc_finite(x, y, without_reduction).k);
  }
}

TEST_CASE("domination frontier keeps cut-implying points only") {
  const auto square = box_set({{0, 1}, {0, 1}});
  const auto inner = to_rat_points(square.points());
  // (3,0) is dominated by (2,0); covering the closer point covers the far one.
  const auto kept = domination_frontier(inner, {{2, 0}, {3, 0}});
  CHECK(kept == std::vector<LatticePoint>{{2, 0}});
  // Mutually undominated points survive.
  const auto both = domination_frontier(inner, {{2, 0}, {0, 2}});
  CHECK(both.size() == 2);
}

TEST_CASE("rc_eps on a single point in one dimension") {
  const auto x = LatticeSet(1, {{0}});
  const auto result = rc_eps(x, make_rat(1, 2), ball(x, 1));
  CHECK(result.k == 2);
}

TEST_CASE("rc_eps dominates rc_finite on the same outer set") {
  const auto square = box_set({{0, 1}, {0, 1}});
  const auto y = ball(square, 1);
  const int plain = rc_finite(square, y).k;
  const int robust = rc_eps(square, make_rat(1, 4), y).k;
  CHECK(robust >= plain);
}

TEST_CASE("rc_eps on the triangle against the 2-ball") {
  const auto d2 = simplex_set(2);
  const Rat eps = make_rat(1, 3);
  const auto result = rc_eps(d2, eps, ball(d2, 2));

  // Independent upper bound: three explicit inequalities valid for the
  // eps-inflated triangle that strictly cut every outer point of the ball.
  const std::vector<Inequality> hand = {
      {{Rat(-1), Rat(0)}, make_rat(1, 3)},
      {{Rat(0), Rat(-1)}, make_rat(1, 3)},
      {{Rat(1), Rat(1)}, make_rat(4, 3)},
  };
  std::vector<RatPoint> inflated;
  for (const auto& p : d2.points()) {
    auto base = to_rat_point(p);
    inflated.push_back(base);
    for (int k = 0; k < 2; ++k) {
      auto plus = base, minus = base;
      plus[k] += eps;
      minus[k] -= eps;
      inflated.push_back(plus);
      inflated.push_back(minus);
    }
  }
  for (const auto& row : hand) {
    for (const auto& p : inflated) CHECK(row.satisfied_by(p));
  }
  for (const auto& y : outer_of(d2, ball(d2, 2))) {
    bool cut = false;
    for (const auto& row : hand) cut = cut || row.strictly_violated_by(y);
    CHECK(cut);
  }

  // Independent lower bound: the pairwise hiding graph of the outer points
  // with respect to the inflated hull contains an odd cycle.
  const auto outer = outer_of(d2, ball(d2, 2));
  std::vector<std::vector<uint8_t>> adj(outer.size(), std::vector<uint8_t>(outer.size(), 0));
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (std::size_t j = i + 1; j < outer.size(); ++j) {
      if (oracle::segment_hits(oracle::rat_point(outer[i]), oracle::rat_point(outer[j]),
                               inflated)) {
        adj[i][j] = adj[j][i] = 1;
      }
    }
  }
  CHECK_FALSE(oracle::bipartite(adj));

  CHECK(result.k == 3);
}

TEST_CASE("rc_eps rejects nonpositive epsilon") {
  const auto x = simplex_set(2);
  CHECK_THROWS_AS(rc_eps(x, Rat(0), ball(x, 1)), std::invalid_argument);
  CHECK_THROWS_AS(rc_eps(x, Rat(-1), ball(x, 1)), std::invalid_argument);
}

TEST_CASE("eps_region constants") {
  CHECK(eps_region(simplex_set(2), Rat(1)).constant == 16);            // d=2, |X|=3
  CHECK(eps_region(LatticeSet(1, {{0}, {1}}), Rat(1)).constant == 6);  // d=1, |X|=2
  CHECK(eps_region(box_set({{0, 1}, {0, 1}}), Rat(2)).constant == 10); // d=2, |X|=4
}

TEST_CASE("eps_region certificate set in one dimension") {
  const auto region = eps_region(LatticeSet(1, {{0}, {1}}), Rat(1));
  // constant 6: all integers within [0,1] + [-6,6].
  CHECK(region.certificate_set == box_set({{-6, 7}}));
}

TEST_CASE("eps_region certificate set matches the closed-form dilation") {
  const auto region = eps_region(box_set({{0, 1}, {0, 1}}), Rat(2));
  // [0,1]^2 + 10*[-1,1]^2 is the box [-10,11]^2.
  CHECK(region.certificate_set == box_set({{-10, 11}, {-10, 11}}));
}

TEST_CASE("eps_region requires a full-dimensional set") {
  CHECK_THROWS_AS(eps_region(LatticeSet(2, {{0, 0}, {1, 0}}), Rat(1)),
                  std::invalid_argument);
}

TEST_CASE("rc_eps_full on the unit segment") {
  const auto result = rc_eps_full(LatticeSet(1, {{0}, {1}}), make_rat(1, 2));
  CHECK(result.k == 2);
  CHECK(result.constant == 6);  // 2 * 1! * 3 / (1/2)^0
}

TEST_CASE("rc_eps_full on planar fixtures") {
  CHECK(rc_eps_full(box_set({{0, 1}, {0, 1}}), make_rat(1, 4)).k == 3);
  CHECK(rc_eps_full(simplex_set(2), make_rat(1, 4)).k == 3);
}

TEST_CASE("rc_eps_full frontier value equals the literal region value") {
  // Small enough to also run the literal composition: the reduced boundary
  // instance must produce the same number.
  const auto x = LatticeSet(1, {{0}, {1}});
  const Rat eps = make_rat(1, 2);
  const auto fast = rc_eps_full(x, eps);
  const auto region = eps_region(x, eps);
  const auto literal = rc_eps(x, eps, region.certificate_set);
  CHECK(fast.k == literal.k);
}

TEST_CASE("epsilon monotonicity of rc_eps_full") {
  for (const auto& x : {box_set({{0, 1}, {0, 1}}), simplex_set(2), cross_set(2)}) {
    int prev = -1;
    for (const Rat eps : {Rat(1), make_rat(1, 2), make_rat(1, 4)}) {
      const int k = rc_eps_full(x, eps).k;
      if (prev >= 0) CHECK(k <= prev);  // shrinking eps never increases the value
      prev = k;
    }
  }
}

TEST_CASE("sandwich: rc against balls never exceeds the robust value") {
  for (const auto& x : {box_set({{0, 1}, {0, 1}}), simplex_set(2), cross_set(2)}) {
    for (const long long t : {1, 2}) {
      const int left = rc_finite(x, ball(x, t)).k;
      for (const Rat eps : {Rat(1), make_rat(1, 2), make_rat(1, 4)}) {
        CHECK(left <= rc_eps_full(x, eps).k);
      }
    }
  }
}

TEST_CASE("certificates re-validate by substitution") {
  const auto fixtures = {simplex_set(2), cross_set(2), box_set({{0, 2}, {0, 1}})};
  for (const auto& x : fixtures) {
    const auto y = ball(x, 2);
    const auto result = rc_finite(x, y);
    CHECK(result.k == result.cert.k);
    CHECK(static_cast<int>(result.cert.inequalities.size()) == result.k);
    CHECK(validate_certificate(to_rat_points(x.points()), outer_of(x, y), result.cert));
  }
}

TEST_CASE("certificate json fields are tamper-sensitive") {
  const auto x = simplex_set(2);
  const auto y = ball(x, 1);
  auto result = rc_finite(x, y);
  REQUIRE(validate_certificate(to_rat_points(x.points()), outer_of(x, y), result.cert));
  auto broken = result.cert;
  broken.inequalities[0].b -= 100;  // now some inner point violates it
  CHECK_FALSE(validate_certificate(to_rat_points(x.points()), outer_of(x, y), broken));
}
