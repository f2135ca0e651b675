#pragma once

// Weighted summaries for k-center with outliers. A greedy run with an
// inflated center target l = ceil((2/mu)^rho k) covers the inliers to within
// a distance r_tilde that is at most mu * r_opt; snapping each covered point
// onto its nearest greedy center (and keeping far points verbatim with unit
// weight) then moves any center set's cost by at most mu * r_opt in either
// direction. Summaries of an id-partition of the data compose by union.

#include <cstdint>
#include <span>
#include <vector>

#include "kco/clustering.hpp"
#include "kco/dataset.hpp"
#include "kco/params.hpp"

namespace kco {

struct Coreset {
  std::vector<PointId> points;          // ids into the source dataset
  std::vector<std::uint64_t> weights;   // positive, aligned with points
  double r_tilde = 0.0;                 // largest snap displacement
  std::vector<PointId> rep_map;         // size n: every source point -> its representative
  bool whole_set_fallback = false;      // l >= n, the data is its own summary
  std::size_t l = 0;                    // center target used
  std::size_t t = 0;                    // greedy rounds used
  std::uint64_t seed = 0;

  std::size_t size() const { return points.size(); }
  std::uint64_t total_weight() const;
};

struct CoresetOptions {
  double eps = 1.0;          // exclusion slack of the internal greedy run
  std::size_t l_override = 0;  // 0 derives l from mu and rho
};

// ceil((2/mu)^rho * k), the center target that makes displacements mu-small.
std::size_t coreset_centers_target(const OutlierParams& p);

Coreset build_coreset(const Dataset& ds, const OutlierParams& p,
                      const CoresetOptions& opt = {});

// Cost of center set e on the weighted summary, excluding the farthest z
// weight units.
double coreset_phi0(const Dataset& ds, const Coreset& cs, const CenterSet& e,
                    std::size_t z);

// Builds per-part summaries (part i on seed p.seed + i) and unions them.
// parts must form a partition of the dataset's ids; empty parts are skipped
// with a warning. A single all-covering part reproduces build_coreset bit for
// bit.
Coreset composable_build(const Dataset& ds,
                         std::span<const std::vector<PointId>> parts,
                         const OutlierParams& p, const CoresetOptions& opt = {});

}  // namespace kco
