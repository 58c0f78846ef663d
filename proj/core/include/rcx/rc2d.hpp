#pragma once

#include "rcx/lattice_set.hpp"
#include "rcx/separation.hpp"

#include <vector>

namespace rcx {

/// One edge inequality a x1 + b x2 <= c of a lattice polygon; (a, b) is
/// primitive (gcd 1) and rows are labeled in counterclockwise normal order.
struct PolygonRow {
  long long a = 0;
  long long b = 0;
  long long c = 0;
};

struct PolygonHRep {
  std::vector<PolygonRow> rows;
};

/// Observers of a planar lattice-convex set, cyclically ordered
/// counterclockwise starting from the lexicographically smallest.
struct ObserverCycle {
  std::vector<LatticePoint> points;
};

/// The cyclic interval {y_start, ..., y_{start+len}} (indices mod cycle size).
struct Arc {
  int start = 0;
  int len = 0;  // number of steps past the start; the arc has len + 1 points
};

/// Irredundant counterclockwise edge description of conv(V), Graham scan.
PolygonHRep hull_hrep_2d(const LatticeSet& v);

/// Moves every edge out by one lattice unit (c -> c + 1) and strips rows
/// that become redundant.
PolygonHRep move_out(const PolygonHRep& p);

/// All observers of X = conv(V) cap Z^2: the integer points on the boundary
/// of the moved-out polygon, walked edge by edge.
ObserverCycle observers_2d(const LatticeSet& v);

/// Inclusion-maximal separable arcs of the cycle. An arc is separable
/// exactly when the chord between its two endpoints misses conv(X); each
/// extension step is verified against that criterion.
std::vector<Arc> maximal_arcs(const LatticeSet& x, const ObserverCycle& cycle);

struct CircularCoverResult {
  int k = 0;
  std::vector<Arc> chosen;
};

/// Minimum number of arcs covering all n cyclic positions. Exact: every arc
/// is tried as the first pick, then the cover is greedily extended by
/// furthest reach. Throws when some position is not covered by any arc.
CircularCoverResult min_circular_cover(const std::vector<Arc>& arcs, int n);

struct Rc2dResult {
  int k = 0;
  SeparationCertificate cert;
  ObserverCycle observers;
  std::vector<Arc> arcs;
};

/// rc(X) for X = conv(V) cap Z^2: observers -> maximal arcs -> minimum
/// circular cover, with one separating inequality recovered per chosen arc.
Rc2dResult rc_2d(const LatticeSet& v);

/// Integer points of conv(V) for a two-dimensional V.
LatticeSet lattice_hull_points_2d(const LatticeSet& v);

}  // namespace rcx
