#pragma once

#include "rcx/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rcx {

/// A finite set of integer points in a fixed ambient dimension. Points are
/// kept sorted lexicographically and deduplicated, so value comparison and
/// membership are cheap and every downstream ordering is reproducible.
class LatticeSet {
 public:
  LatticeSet() = default;
  LatticeSet(int dim, std::vector<LatticePoint> points);

  int dim() const { return dim_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticePoint& p) const;

  LatticeSet with(const LatticePoint& p) const;
  LatticeSet united(const LatticeSet& other) const;
  LatticeSet minus(const LatticeSet& other) const;

  bool operator==(const LatticeSet& other) const = default;

 private:
  int dim_ = 0;
  std::vector<LatticePoint> points_;
};

bool is_lattice_convex(const LatticeSet& x);
int dim_of(const LatticeSet& x);

/// The integer box [-t, t]^d in the dimension of x.
LatticeSet ball(const LatticeSet& x, long long t);

/// z is an observer of the lattice-convex set x when x united with z is
/// again lattice-convex. Callers guarantee that x is lattice-convex.
bool is_observer(const LatticeSet& x, const LatticePoint& z);

LatticeSet observers_in_region(const LatticeSet& x, const LatticeSet& region);

/// When x meets every residue class mod 2, the Minkowski set 2x - x is a
/// finite superset of obs(x); otherwise there is nothing to report.
std::optional<LatticeSet> parity_candidates(const LatticeSet& x);

LatticeSet simplex_set(int d);
LatticeSet cross_set(int d);
LatticeSet box_set(const std::vector<std::pair<long long, long long>>& segments);

/// The points e_j - e_k + e_l over all index triples j < k < l.
LatticeSet debruijn_set(int d);

/// The 28 fixture points certifying that four inequalities are needed to
/// separate the standard 3-simplex from its surroundings; index order is
/// the library-wide canonical one for this fixture.
LatticeSet delta3_certificate();
const std::vector<LatticePoint>& delta3_certificate_points();

/// Fixture families of 3-dimensional sets around the standard simplex, all
/// with separation number exactly four. k is 1-based, k in {1,2,3,4}.
LatticeSet eq3_set(int k);

}  // namespace rcx
