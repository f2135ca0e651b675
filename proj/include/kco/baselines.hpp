#pragma once

// Reference algorithms the randomized methods are measured against: classic
// farthest-point traversal, the 3-approximation that probes candidate radii,
// exhaustive search over center subsets, and a minimum enclosing ball.

#include <cstdint>
#include <span>
#include <vector>

#include "kco/clustering.hpp"
#include "kco/dataset.hpp"

namespace kco {

struct OracleResult {
  double r_opt = 0.0;
  CenterSet centers;
  std::vector<PointId> excluded;
};

// Farthest-point traversal: k centers, no outlier handling in the selection.
// Each round takes the point farthest from the current centers (smallest id
// on ties, skipping points already chosen).
CenterSet gonzalez(const Dataset& ds, std::size_t k, PointId first = 0);

// Radius-probing 3-approximation for k centers with z outliers. Feasibility
// of a candidate radius r: k times, pick the point whose r-ball covers the
// most uncovered weight (smallest id on ties) and discard its 3r-ball; the
// uncovered weight left must be at most z. Candidates are the pairwise
// distances, searched by bisection. Weighted points count by weight.
// Guarded: refuses n > 3000 (the probe cost is k n^2).
CenterSet charikar(const Dataset& ds, std::size_t k, std::size_t z,
                   const Weights* w = nullptr);

// Exact optimum over center subsets of the input points, excluding the
// farthest z. Ties go to the lexicographically smallest center subset.
// Guarded: refuses C(n, k) > 10^7 subsets.
OracleResult brute_force_opt(const Dataset& ds, std::size_t k, std::size_t z);

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

// Minimum enclosing ball, (1 + delta)-approximate: ceil(1/delta^2) rounds of
// stepping the center toward the farthest point with shrinking step 1/(i+1).
// Euclidean only.
Ball meb(const double* pts, std::size_t m, std::size_t d, double delta);
Ball meb(const Dataset& ds, std::span<const PointId> ids, double delta);

}  // namespace kco
