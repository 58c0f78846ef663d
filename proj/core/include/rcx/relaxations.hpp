#pragma once

#include "rcx/lattice_set.hpp"
#include "rcx/polyhedron.hpp"
#include "rcx/separation.hpp"

#include <optional>

namespace rcx {

enum class VerifyStatus { Verified, Fails, Unbounded };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::Fails;
  std::optional<LatticePoint> witness;  // a point on the wrong side, when Fails
};

/// Is Q a relaxation of X, i.e. Q cap Z^d == X? The witness is either a
/// point of X outside Q or a lattice point of Q outside X.
VerifyResult verify_relaxation(const HPolyhedron& q, const LatticeSet& x);

/// The (l+2)-inequality simplex cutting out {0,1}^l x {0..b}:
///   x_k <= 1 + sum_{i=k+1}^{l+1} (b+1)^-i x_i   (k = 1..l)
///   x_{l+1} <= b
///   x_1 + sum_{i=2}^{l+1} (b+1)^-i x_i >= 0
HPolyhedron box_simplex(int l, long long b);

/// Closed form for discrete boxes with k segments of length >= 2 and l of
/// length 1: the answer is 2k + l.
long long box_rc(long long k, long long l);

/// Hard-coded simplex relaxations of the discrete crosspolytope, d in {3,4}.
HPolyhedron cross_relaxation(int d);

/// Lifts a relaxation {Ax <= 1} of the d-crosspolytope to a relaxation of
/// the (d+1)-crosspolytope with two extra rows:
///   A (x - y e_1) <= 1,  -1 <= x_1 + y <= 1.
/// Rows are first normalized to right-hand side 1 (rows with rhs <= 0 are
/// rejected), and the input must verify as a crosspolytope relaxation.
HPolyhedron cross_lift(const HPolyhedron& a);

struct IterativeResult {
  bool converged = false;
  int k = 0;                 // exact value when converged, else a lower bound
  HPolyhedron relaxation;    // meaningful when converged
  LatticeSet final_outer;    // the certificate set Y at the end of the run
  int rounds = 0;
};

/// Grows a candidate certificate set: solve the separation problem, harvest
/// lattice points of the resulting system inside [-t,t]^d that should have
/// been cut, and repeat. Converged means the final system is a genuine
/// bounded relaxation of X; otherwise the last k is still a valid lower
/// bound for the relaxation count of X.
IterativeResult iterative_rc(const LatticeSet& x, const LatticeSet& y0,
                             long long verify_box_t, int max_rounds,
                             const RcOptions& opts = {});

}  // namespace rcx
