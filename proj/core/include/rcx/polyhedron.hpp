#pragma once

#include "rcx/lattice_set.hpp"
#include "rcx/rational.hpp"

#include <vector>

namespace rcx {

/// One row a . x <= b of an inequality system.
struct Inequality {
  std::vector<Rat> a;
  Rat b;

  Rat eval(const LatticePoint& x) const;
  Rat eval(const RatPoint& x) const;
  bool satisfied_by(const LatticePoint& x) const { return eval(x) <= b; }
  bool satisfied_by(const RatPoint& x) const { return eval(x) <= b; }
  bool strictly_violated_by(const LatticePoint& x) const { return eval(x) > b; }
};

struct HPolyhedron {
  int dim = 0;
  std::vector<Inequality> rows;
};

struct LatticePointsResult {
  bool bounded = false;  // false signals the enumeration cannot certify anything
  LatticeSet points;     // meaningful only when bounded
};

/// All integer points of P. Boundedness is certified first by maximizing and
/// minimizing every coordinate; afterwards the integer bounding box is
/// enumerated row-major and filtered by exact substitution.
LatticePointsResult lattice_points(const HPolyhedron& p);

}  // namespace rcx
