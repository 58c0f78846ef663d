#pragma once

#include "rcx/rational.hpp"

#include <optional>
#include <vector>

namespace rcx {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<Rat> coeffs;  // length = ambient dimension
  Relation rel = Relation::LessEq;
  Rat rhs;
};

LinearConstraint make_le(std::vector<Rat> coeffs, Rat rhs);
LinearConstraint make_ge(std::vector<Rat> coeffs, Rat rhs);
LinearConstraint make_eq(std::vector<Rat> coeffs, Rat rhs);

struct LpFeasibility {
  bool feasible = false;
  RatPoint witness;  // satisfies every constraint exactly when feasible
};

/// Decides feasibility of a system of linear constraints over free rational
/// variables. Exact phase-1 simplex with Bland's rule; there is no tolerance
/// anywhere: Feasible comes with an exact witness, Infeasible means no
/// rational point satisfies the system.
LpFeasibility lp_feasible(const std::vector<LinearConstraint>& constraints, int dim);

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class LpSense { Minimize, Maximize };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatPoint point;
};

LpSolution lp_optimize(const std::vector<LinearConstraint>& constraints, int dim,
                       const std::vector<Rat>& objective, LpSense sense);

namespace detail {

/// Phase-1 feasibility for the standard form A y = b, y >= 0.
/// Rows of `a` must all have the same length. Returns a witness y or nullopt.
std::optional<std::vector<Rat>> feasible_nonneg(std::vector<std::vector<Rat>> a,
                                                std::vector<Rat> b);

}  // namespace detail

}  // namespace rcx
