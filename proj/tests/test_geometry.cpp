#include "rcx/geometry.hpp"
#include "rcx/lattice_set.hpp"
#include "rcx/polyhedron.hpp"
#include "rcx/relaxations.hpp"

#include <doctest.h>

#include "test_oracles.hpp"

#include <random>

using namespace rcx;

TEST_CASE("conv_membership basics") {
  CHECK(conv_membership(LatticePoint{0, 0}, {{0, 0}}));
  CHECK_FALSE(conv_membership(LatticePoint{1, 1}, {{0, 0}, {1, 0}, {0, 1}}));
  // midpoint of (-1,0) and (1,0) is the origin, inside conv{(0,0),(0,1)}
  const RatPoint midpoint = {Rat(0), Rat(0)};
  CHECK(conv_membership(midpoint, to_rat_points({{0, 0}, {0, 1}})));
  CHECK_THROWS_AS(conv_membership(RatPoint{Rat(0)}, std::vector<RatPoint>{}),
                  std::invalid_argument);
}

TEST_CASE("conv_membership agrees with the Caratheodory oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> coord(-3, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 1 + trial % 3;
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<LatticePoint> pts;
    for (int i = 0; i < n; ++i) {
      LatticePoint p(d);
      for (int k = 0; k < d; ++k) p[k] = coord(rng);
      pts.push_back(std::move(p));
    }
    LatticePoint q(d);
    for (int k = 0; k < d; ++k) q[k] = coord(rng);
    CHECK(conv_membership(q, pts) == oracle::member(oracle::rat_point(q), oracle::rat_points(pts)));
  }
}

TEST_CASE("segment_hits_hull on the unit square") {
  const std::vector<LatticePoint> square = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(segment_hits_hull(LatticePoint{2, 0}, LatticePoint{0, 2}, square));
  CHECK_FALSE(segment_hits_hull(LatticePoint{2, 0}, LatticePoint{2, 1}, square));
}

TEST_CASE("box hiding-witness pairs meet the hull") {
  // Segments {-1..1}^2: the witness points two past each end of each segment.
  const auto box = box_set({{-1, 1}, {-1, 1}}).points();
  const std::vector<LatticePoint> witnesses = {{-2, 0}, {2, 0}, {0, -2}, {0, 2}};
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      CHECK(segment_hits_hull(witnesses[i], witnesses[j], box));
    }
  }
}

TEST_CASE("segment_hits_hull properties") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long long> coord(-3, 3);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = 1 + trial % 3;
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<LatticePoint> pts;
    for (int i = 0; i < n; ++i) {
      LatticePoint p(d);
      for (int k = 0; k < d; ++k) p[k] = coord(rng);
      pts.push_back(std::move(p));
    }
    LatticePoint p(d), q(d);
    for (int k = 0; k < d; ++k) {
      p[k] = coord(rng);
      q[k] = coord(rng);
    }
    const bool pq = segment_hits_hull(p, q, pts);
    CHECK(pq == segment_hits_hull(q, p, pts));  // symmetry
    CHECK(pq == oracle::segment_hits(oracle::rat_point(p), oracle::rat_point(q),
                                     oracle::rat_points(pts)));
    CHECK(segment_hits_hull(p, p, pts) == conv_membership(p, pts));  // degenerate
  }
}

TEST_CASE("lattice_points of the unit square") {
  HPolyhedron p;
  p.dim = 2;
  p.rows = {
      {{Rat(1), Rat(0)}, Rat(1)},  {{Rat(-1), Rat(0)}, Rat(0)},
      {{Rat(0), Rat(1)}, Rat(1)},  {{Rat(0), Rat(-1)}, Rat(0)},
  };
  const auto result = lattice_points(p);
  REQUIRE(result.bounded);
  CHECK(result.points == box_set({{0, 1}, {0, 1}}));
}

TEST_CASE("halfplane is reported unbounded") {
  HPolyhedron p;
  p.dim = 2;
  p.rows = {{{Rat(1), Rat(1)}, Rat(1)}};
  CHECK_FALSE(lattice_points(p).bounded);
}

TEST_CASE("crosspolytope relaxation matrix cuts out exactly the crosspolytope") {
  const auto q = cross_relaxation(3);
  const auto result = lattice_points(q);
  REQUIRE(result.bounded);
  CHECK(result.points == cross_set(3));
}

TEST_CASE("lattice_points is invariant under row order") {
  HPolyhedron p;
  p.dim = 2;
  p.rows = {
      {{Rat(1), Rat(1)}, Rat(2)},   {{Rat(-1), Rat(0)}, Rat(0)},
      {{Rat(0), Rat(-1)}, Rat(0)},  {{Rat(2), Rat(-1)}, Rat(3)},
  };
  const auto base = lattice_points(p);
  std::reverse(p.rows.begin(), p.rows.end());
  const auto reversed = lattice_points(p);
  REQUIRE(base.bounded);
  REQUIRE(reversed.bounded);
  CHECK(base.points == reversed.points);
}

TEST_CASE("infeasible polyhedron has no lattice points") {
  HPolyhedron p;
  p.dim = 1;
  p.rows = {{{Rat(1)}, Rat(-1)}, {{Rat(-1)}, Rat(-1)}};
  const auto result = lattice_points(p);
  REQUIRE(result.bounded);
  CHECK(result.points.empty());
}

TEST_CASE("affine_dim ranks difference vectors exactly") {
  CHECK(affine_dim({{3, 3}}) == 0);
  CHECK(affine_dim({{0, 0}, {1, 1}, {2, 2}}) == 1);
  CHECK(affine_dim({{0, 0}, {1, 0}, {0, 1}}) == 2);
  CHECK(affine_dim({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
}
