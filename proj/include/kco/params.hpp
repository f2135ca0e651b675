#pragma once

// Shared knobs for clustering with outliers: k centers, z points that may be
// ignored, and the relaxation/confidence parameters the greedy algorithms use.

#include <cstddef>
#include <cstdint>

#include "kco/common.hpp"

namespace kco {

struct OutlierParams {
  std::size_t k = 1;
  std::size_t z = 0;
  double eps = 1.0;   // exclusion slack: up to (1+eps)z points may be dropped
  double eta = 0.1;   // per-round failure tolerance of the sampling bounds
  double mu = 0.2;    // summary approximation level (coreset construction)
  double rho = 2.0;   // doubling dimension assumed by size formulas
  std::uint64_t seed = 0;

  // Outlier fraction z/n.
  double gamma(std::size_t n) const {
    return static_cast<double>(z) / static_cast<double>(n);
  }

  void validate(std::size_t n) const {
    KCO_REQUIRE(n >= 1, "params: dataset must be nonempty");
    KCO_REQUIRE(k >= 1 && k <= n, "params: need 1 <= k <= n");
    KCO_REQUIRE(z < n, "params: need z < n");
    KCO_REQUIRE(eps >= 0.0, "params: need eps >= 0");
    KCO_REQUIRE(eta > 0.0 && eta < 1.0, "params: need eta in (0, 1)");
    KCO_REQUIRE(mu > 0.0 && mu < 1.0, "params: need mu in (0, 1)");
    KCO_REQUIRE(rho > 0.0, "params: need rho > 0");
  }
};

}  // namespace kco
