#include "kco/rng.hpp"

#include <algorithm>
#include <numeric>

namespace kco {

std::vector<PointId> sample_indices(Rng& rng, std::size_t n, std::size_t m) {
  KCO_REQUIRE(m <= n, "sample_indices: m must not exceed n");
  std::vector<PointId> arr(n);
  std::iota(arr.begin(), arr.end(), PointId{0});
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(arr[i], arr[j]);
  }
  arr.resize(m);
  std::sort(arr.begin(), arr.end());
  return arr;
}

std::vector<PointId> sample_weighted(Rng& rng, std::vector<PointId> ids,
                                     std::vector<double> w, std::size_t s) {
  KCO_REQUIRE(ids.size() == w.size(), "sample_weighted: ids/weights size mismatch");
  KCO_REQUIRE(s <= ids.size(), "sample_weighted: draw count exceeds population");
  std::vector<PointId> out;
  out.reserve(s);
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (std::size_t d = 0; d < s; ++d) {
    KCO_REQUIRE(total > 0.0, "sample_weighted: nonpositive total weight");
    const double x = rng.unit() * total;
    double cum = 0.0;
    std::size_t pick = ids.size() - 1;  // rounding can push x past the last bin
    for (std::size_t i = 0; i < ids.size(); ++i) {
      cum += w[i];
      if (x < cum) {
        pick = i;
        break;
      }
    }
    out.push_back(ids[pick]);
    total -= w[pick];
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(pick));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace kco
