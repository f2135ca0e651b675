#pragma once

// Synthetic instances with a known answer: k Gaussian clusters planted in a
// hypercube plus z scattered outliers, each outlier kept strictly outside
// every cluster's enclosing ball. The largest enclosing-ball radius is the
// reference cost r_opt that ratios are measured against.

#include <cstdint>
#include <span>
#include <vector>

#include "kco/baselines.hpp"
#include "kco/clustering.hpp"
#include "kco/dataset.hpp"

namespace kco {

struct SynthParams {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t k = 1;
  std::size_t z = 0;
  double side = 200.0;      // cluster means are uniform in [-side/2, side/2]^dim
  double variance = 10.0;   // per-coordinate Gaussian variance within a cluster
  double meb_delta = 0.01;  // enclosing-ball approximation level
  std::uint64_t seed = 0;
};

struct PlantedInstance {
  Dataset data;  // cluster blocks in label order, then the z outliers
  std::vector<int> labels;  // cluster id, -1 for outliers
  std::vector<std::vector<double>> planted_centers;  // the Gaussian means
  std::vector<Ball> cluster_balls;
  double r_opt = 0.0;
  SynthParams params;
};

// Cluster sizes are 1 + multinomial(n - z - k) with Dirichlet(1^k) mixture
// weights, so every cluster is nonempty. Outliers are drawn uniformly in the
// hypercube of side 4*side (same center) and rejection-resampled until
// strictly outside all cluster balls; generation fails after 10^6 total
// draws.
PlantedInstance synth(const SynthParams& sp);

// Distinct true clusters (labels >= 0) hit by the center set.
std::size_t lambda_counter(const CenterSet& e, std::span<const int> labels);

}  // namespace kco
