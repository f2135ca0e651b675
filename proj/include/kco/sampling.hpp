#pragma once

// Uniform-sampling reduction: when outliers are a constant fraction gamma of
// the data, a uniform sample big enough in k, the dimension and 1/gamma
// preserves every center set's cost, so the clustering can run on the sample
// with a proportionally scaled outlier budget z'.

#include <cstdint>
#include <vector>

#include "kco/dataset.hpp"
#include "kco/params.hpp"

namespace kco {

struct SamplePlan {
  std::size_t sample_size = 0;  // requested size before the n cap
  std::size_t drawn = 0;        // actual sample size, min(sample_size, n)
  std::size_t z_prime = 0;      // outlier budget on the sample
  double eps = 0.0;
  double gamma = 0.0;
  double lambda = 0.0;
  double c = 1.0;
  std::size_t k = 0;
  std::size_t dim = 0;  // 0 for metric data
  bool vacuous = false; // sample_size >= n, the sample is the whole set
};

// Size that preserves costs with probability 1 - lambda on D-dimensional
// data: ceil((c / (eps^2 gamma)) (k D log2(2k) ln(2kD/(eps gamma)) + ln(1/lambda))).
// Requires eps in (0, 1/2].
std::size_t sample_size(double eps, double gamma, std::size_t k, std::size_t d,
                        double lambda, double c);

// Metric-data variant without a dimension: ceil(c k ln(n) / (eps^2 gamma)).
std::size_t sample_size_metric(double eps, double gamma, std::size_t k,
                               std::size_t n, double c);

struct Reduction {
  Dataset sample;
  std::vector<PointId> ids;  // sample row i is source point ids[i]; ascending
  SamplePlan plan;
};

// Draws the sample (uniform, without replacement, ascending ids) and scales
// the outlier budget: z' = ceil((1+eps) gamma |S|).
Reduction uniform_reduce(const Dataset& ds, std::size_t k, double eps,
                         double gamma, double lambda, double c,
                         std::uint64_t seed);

// Same with gamma = z/n taken from the params.
Reduction uniform_reduce(const Dataset& ds, const OutlierParams& p,
                         double lambda, double c);

}  // namespace kco
