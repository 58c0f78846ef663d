#pragma once

#include "rcx/lp.hpp"
#include "rcx/rational.hpp"

#include <vector>

namespace rcx {

/// q in conv(S)? Decided exactly by LP feasibility on barycentric coordinates.
bool conv_membership(const RatPoint& q, const std::vector<RatPoint>& hull_points);
bool conv_membership(const LatticePoint& q, const std::vector<LatticePoint>& hull_points);

/// Does the closed segment [p, q] meet conv(S)? One LP.
bool segment_hits_hull(const RatPoint& p, const RatPoint& q,
                       const std::vector<RatPoint>& hull_points);
bool segment_hits_hull(const LatticePoint& p, const LatticePoint& q,
                       const std::vector<LatticePoint>& hull_points);

std::vector<RatPoint> to_rat_points(const std::vector<LatticePoint>& pts);

/// Exact rank of the difference vectors {p - pts[0]}; the affine dimension.
int affine_dim(const std::vector<LatticePoint>& pts);

}  // namespace rcx
