#pragma once

#include "rcx/lattice_set.hpp"
#include "rcx/polyhedron.hpp"
#include "rcx/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rcx {

/// A separation problem: every inner point must satisfy all inequalities,
/// every outer point must strictly violate at least one.
struct SeparationInstance {
  int dim = 0;
  std::vector<RatPoint> inner;
  std::vector<LatticePoint> outer;
};

/// Witness for "k inequalities suffice": the system plus, for each outer
/// point, one inequality it strictly violates.
struct SeparationCertificate {
  int k = 0;
  std::vector<Inequality> inequalities;
  std::vector<std::pair<LatticePoint, int>> assignment;  // point -> inequality index
};

/// Re-validates a certificate by direct substitution.
bool validate_certificate(const std::vector<RatPoint>& inner,
                          const std::vector<LatticePoint>& outer,
                          const SeparationCertificate& cert);

/// Single-hyperplane separability: Some(a, b) iff the system
///   a.x <= b for all inner,  a.y >= b + 1 for all of I
/// is feasible (the unit margin normalizes strictness by scaling), which
/// happens exactly when conv(inner) and conv(I) are disjoint.
std::optional<Inequality> separable(const std::vector<RatPoint>& inner,
                                    const std::vector<LatticePoint>& outer_subset);

/// Greedy extension of `seed` to an inclusion-maximal separable subset of
/// `universe`; candidates are tried in lexicographic point order, so the
/// result is deterministic. `seed` itself must be separable.
std::vector<LatticePoint> maximal_separable(const std::vector<RatPoint>& inner,
                                            const std::vector<LatticePoint>& universe,
                                            const std::vector<LatticePoint>& seed);

struct RcOptions {
  /// Drop outer points whose covering is implied by a point closer to the
  /// hull (exact preprocessing; never changes the optimum).
  bool domination_reduction = true;
  int domination_cap = 600;  // skip the quadratic reduction above this size
  /// Chromatic number of the hiding graph as a root lower bound (the
  /// clique bound alone is used inside the tree).
  bool chromatic_root_bound = true;
  int chromatic_cap = 44;  // compute it on at most this many vertices
  int jobs = 1;            // threads for hiding-graph construction
};

struct RcResult {
  int k = 0;
  SeparationCertificate cert;
};

/// Minimum number of inequalities separating the instance, with certificate.
/// Exact branch-and-bound set cover over maximal separable subsets:
/// branching on the uncovered point contained in the fewest maximal sets,
/// greedy cover as incumbent, hiding-pair cliques for pruning.
RcResult rc_instance(const SeparationInstance& instance, const RcOptions& opts = {});

/// rc(X, Y): X must be lattice-convex; outer set is Y \ X. Zero when empty.
RcResult rc_finite(const LatticeSet& x, const LatticeSet& y, const RcOptions& opts = {});

/// rc_eps(X, eps, Y): the inner set becomes X + {0, +-eps e_i} (exact
/// rational points) and the outer set Y minus exact matches with it.
/// Throws when some outer point lies in conv of the inner set (no strict
/// separation exists for this epsilon).
RcResult rc_eps(const LatticeSet& x, const Rat& eps, const LatticeSet& y,
                const RcOptions& opts = {});

/// The finite certificate region for rc_eps: the dilation constant
/// 2 d! (|X|+1) / eps^(d-1) and all integer points of
/// conv(X) + constant * [-1,1]^d, each decided by one membership LP.
struct EpsRegion {
  Rat epsilon;
  Rat constant;
  LatticeSet certificate_set;
};

EpsRegion eps_region(const LatticeSet& x, const Rat& eps);

struct RcEpsFullResult {
  int k = 0;
  SeparationCertificate cert;
  Rat constant;
};

/// rc_eps against the full certificate region of eps_region. For d <= 2 the
/// region is reduced exactly to its boundary frontier before covering (every
/// interior point of the region is dominated by a frontier point, so the
/// value is unchanged); the certificate then covers that frontier instance.
RcEpsFullResult rc_eps_full(const LatticeSet& x, const Rat& eps, const RcOptions& opts = {});

/// The exact preprocessing used by rc_instance: keeps only outer points not
/// dominated by another outer point (z dominates y when z lies in
/// conv(inner + {y}) and not vice versa; any inequality cutting z then cuts
/// y as well). Returned points are lex-sorted.
std::vector<LatticePoint> domination_frontier(const std::vector<RatPoint>& inner,
                                              const std::vector<LatticePoint>& outer);

}  // namespace rcx
