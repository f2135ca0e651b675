#pragma once

// Order-statistic helpers over a vector of nearest-center distances. All ties
// break toward the smaller point id so results are canonical.

#include <cstddef>
#include <span>
#include <vector>

#include "kco/common.hpp"
#include "kco/dataset.hpp"

namespace kco {

// The m points with the largest distances (ties by smaller id), returned in
// ascending id order. Partition-based: expected O(n), never sorts all of n.
std::vector<PointId> farthest_subset(std::span<const double> dists, std::size_t m);

// Single farthest point, smallest id on ties.
PointId farthest_point(std::span<const double> dists);

// Minimal descending-distance prefix whose cumulative weight reaches budget
// (whole points; ties by smaller id; null weights mean unit). Ascending id
// order. With unit weights and integral budget this equals farthest_subset.
// A budget at or above the total weight selects every point.
std::vector<PointId> farthest_weighted_prefix(std::span<const double> dists,
                                              const Weights* w, double budget);

}  // namespace kco
