#include "kco/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kco {
namespace {

struct FartherFirst {
  std::span<const double> dists;
  bool operator()(PointId a, PointId b) const {
    if (dists[a] != dists[b]) return dists[a] > dists[b];
    return a < b;
  }
};

}  // namespace

std::vector<PointId> farthest_subset(std::span<const double> dists, std::size_t m) {
  const std::size_t n = dists.size();
  KCO_REQUIRE(m >= 1 && m <= n, "farthest_subset: need 1 <= m <= n");
  std::vector<PointId> idx(n);
  std::iota(idx.begin(), idx.end(), PointId{0});
  if (m < n) {
    std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(m) - 1,
                     idx.end(), FartherFirst{dists});
  }
  idx.resize(m);
  std::sort(idx.begin(), idx.end());
  return idx;
}

PointId farthest_point(std::span<const double> dists) {
  KCO_REQUIRE(!dists.empty(), "farthest_point: empty input");
  PointId best = 0;
  for (PointId i = 1; i < dists.size(); ++i) {
    if (dists[i] > dists[best]) best = i;
  }
  return best;
}

std::vector<PointId> farthest_weighted_prefix(std::span<const double> dists,
                                              const Weights* w, double budget) {
  const std::size_t n = dists.size();
  KCO_REQUIRE(n > 0, "farthest_weighted_prefix: empty input");
  if (w != nullptr) validate_weights(*w, n);
  if (budget <= 0.0) return {};

  double w_min = 1.0;
  double w_total = static_cast<double>(n);
  if (w != nullptr) {
    w_min = *std::min_element(w->begin(), w->end());
    w_total = std::accumulate(w->begin(), w->end(), 0.0);
  }

  std::vector<PointId> idx(n);
  std::iota(idx.begin(), idx.end(), PointId{0});

  // budget / w_min ids always cover the budget, but that cap is loose when a
  // few light points sit among heavy ones. Start from a mean-based guess and
  // double until the ordered prefix covers the budget; the prefix itself is
  // fixed by the (distance, id) order, so the starting guess never changes
  // the result.
  std::size_t safe_cap = n;
  if (budget < w_total) {
    const double cap = std::floor(budget / w_min) + 1.0;
    if (cap < static_cast<double>(n)) safe_cap = static_cast<std::size_t>(cap);
  }
  std::size_t bound = safe_cap;
  if (w != nullptr && n > 0) {
    const double guess = budget / (w_total / static_cast<double>(n)) * 1.5 + 16.0;
    if (guess < static_cast<double>(bound)) bound = static_cast<std::size_t>(guess);
  }

  std::vector<PointId> out;
  for (;;) {
    if (bound < n) {
      std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(bound) - 1,
                       idx.end(), FartherFirst{dists});
    }
    const auto mid = idx.begin() + static_cast<std::ptrdiff_t>(std::min(bound, n));
    std::sort(idx.begin(), mid, FartherFirst{dists});

    out.clear();
    double cum = 0.0;
    bool covered = false;
    for (auto it = idx.begin(); it != mid; ++it) {
      out.push_back(*it);
      cum += (w != nullptr) ? (*w)[*it] : 1.0;
      if (cum >= budget) {
        covered = true;
        break;
      }
    }
    if (covered || bound >= safe_cap) break;
    bound = std::min(safe_cap, bound * 2);
  }

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kco
