#pragma once

// Result types shared by the clustering algorithms.

#include <cstdint>
#include <optional>
#include <vector>

#include "kco/common.hpp"

namespace kco {

struct CenterSet {
  std::vector<PointId> ids;  // insertion order, no duplicates

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }

  bool contains(PointId p) const {
    for (PointId c : ids) {
      if (c == p) return true;
    }
    return false;
  }
};

struct ClusteringResult {
  CenterSet centers;
  double radius = 0.0;                   // cost after dropping the excluded points
  std::vector<PointId> excluded;         // farthest first, ties by smaller id
  std::vector<std::uint32_t> assignment; // point -> index into centers.ids; kNoPoint if excluded
  std::size_t rounds = 0;
  std::optional<double> ratio;           // radius / r_opt when ground truth is known
  bool all_excluded = false;             // exclusion budget swallowed every point
  std::uint64_t seed = 0;                // seed of the run that produced this result
};

}  // namespace kco
