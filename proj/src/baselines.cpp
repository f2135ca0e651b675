#include "kco/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kco/cost.hpp"
#include "kco/parallel.hpp"
#include "kco/simd/kernels.hpp"

namespace kco {

CenterSet gonzalez(const Dataset& ds, std::size_t k, PointId first) {
  const std::size_t n = ds.size();
  KCO_REQUIRE(k >= 1 && k <= n, "gonzalez: need 1 <= k <= n");
  ds.check_id(first);

  CenterSet e;
  std::vector<char> in(n, 0);
  NearestDistances nd(ds);
  auto add = [&](PointId c) {
    in[c] = 1;
    e.ids.push_back(c);
    nd.add_center(c);
  };
  add(first);
  while (e.size() < k) {
    const auto v = nd.values();
    PointId best = kNoPoint;
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i]) continue;
      if (best == kNoPoint || v[i] > v[best]) best = static_cast<PointId>(i);
    }
    add(best);
  }
  return e;
}

namespace {

// Dense distance matrix access for the radius-probing search.
class DistMatrix {
 public:
  explicit DistMatrix(const Dataset& ds) : ds_(&ds), n_(ds.size()) {
    if (ds.is_euclidean()) {
      owned_.resize(n_ * n_);
      const std::size_t d = ds.dim();
      parallel_for(n_, 64, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          simd::kernels().dists_to(ds.rows(), n_, d, ds.row(static_cast<PointId>(i)),
                                   owned_.data() + i * n_);
        }
      });
    }
  }

  const double* row(std::size_t i) const {
    return owned_.empty() ? ds_->metric_row(static_cast<PointId>(i))
                          : owned_.data() + i * n_;
  }

 private:
  const Dataset* ds_;
  std::size_t n_;
  std::vector<double> owned_;
};

struct Probe {
  bool feasible = false;
  CenterSet centers;
};

Probe probe_radius(const DistMatrix& dm, std::size_t n, std::size_t k,
                   std::size_t z, const Weights* w, double r) {
  std::vector<double> uncovered(n);
  if (w != nullptr) {
    std::copy(w->begin(), w->end(), uncovered.begin());
  } else {
    std::fill(uncovered.begin(), uncovered.end(), 1.0);
  }
  double remaining = std::accumulate(uncovered.begin(), uncovered.end(), 0.0);

  Probe out;
  std::vector<char> used(n, 0);
  std::vector<double> cover(n);
  for (std::size_t it = 0; it < k && it < n; ++it) {
    parallel_for(n, 64, [&](std::size_t b, std::size_t e) {
      for (std::size_t c = b; c < e; ++c) {
        const double* row = dm.row(c);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (uncovered[i] > 0.0 && row[i] <= r) s += uncovered[i];
        }
        cover[c] = s;
      }
    });
    std::size_t best = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (best == n || cover[c] > cover[best]) best = c;
    }
    if (cover[best] <= 0.0) {
      // Nothing left within r of anyone; fill up with the smallest unused id.
      for (std::size_t c = 0; c < n; ++c) {
        if (!used[c]) {
          best = c;
          break;
        }
      }
    }
    used[best] = 1;
    out.centers.ids.push_back(static_cast<PointId>(best));
    const double* row = dm.row(best);
    const double reach = 3.0 * r;
    for (std::size_t i = 0; i < n; ++i) {
      if (uncovered[i] > 0.0 && row[i] <= reach) {
        remaining -= uncovered[i];
        uncovered[i] = 0.0;
      }
    }
  }
  out.feasible = remaining <= static_cast<double>(z);
  return out;
}

}  // namespace

CenterSet charikar(const Dataset& ds, std::size_t k, std::size_t z,
                   const Weights* w) {
  const std::size_t n = ds.size();
  KCO_REQUIRE(k >= 1, "charikar: need k >= 1");
  if (w != nullptr) validate_weights(*w, n);
  if (n > 3000) fail_guard("charikar: n > 3000 (probe cost is k n^2)");

  if (k >= n) {
    CenterSet e;
    e.ids.resize(n);
    std::iota(e.ids.begin(), e.ids.end(), PointId{0});
    return e;
  }

  const DistMatrix dm(ds);
  std::vector<double> cands;
  cands.reserve(n * (n - 1) / 2 + 1);
  cands.push_back(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = dm.row(i);
    for (std::size_t j = i + 1; j < n; ++j) cands.push_back(row[j]);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  // The largest pairwise distance is always feasible (one ball covers all),
  // so bisect for the boundary and return its centers.
  std::ptrdiff_t lo = -1;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(cands.size()) - 1;
  while (hi - lo > 1) {
    const std::ptrdiff_t mid = lo + (hi - lo) / 2;
    if (probe_radius(dm, n, k, z, w, cands[static_cast<std::size_t>(mid)]).feasible) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return probe_radius(dm, n, k, z, w, cands[static_cast<std::size_t>(hi)]).centers;
}

namespace {

// Exhaustive lexicographic walk over k-subsets starting from a fixed first
// center. Distance arrays are refined level by level so each node costs one
// pass, not k.
struct SubsetSearch {
  const Dataset& ds;
  std::size_t n, k, z;
  std::vector<std::vector<double>> dist;
  std::vector<PointId> combo;
  std::vector<double> row;
  double best_r = std::numeric_limits<double>::infinity();
  std::vector<PointId> best;

  SubsetSearch(const Dataset& ds_, std::size_t k_, std::size_t z_)
      : ds(ds_), n(ds_.size()), k(k_), z(z_), dist(k_), combo(k_), row(ds_.size()) {
    for (auto& v : dist) v.resize(n);
  }

  const double* center_row(PointId c) {
    if (!ds.is_euclidean()) return ds.metric_row(c);
    simd::kernels().dists_to(ds.rows(), n, ds.dim(), ds.row(c), row.data());
    return row.data();
  }

  void enter(std::size_t level, PointId c) {
    combo[level] = c;
    const double* r = center_row(c);
    if (level == 0) {
      std::copy(r, r + n, dist[0].begin());
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        dist[level][i] = std::min(dist[level - 1][i], r[i]);
      }
    }
  }

  void recurse(std::size_t level) {
    if (level == k) {
      const double r = phi_radius(dist[k - 1], z, 0.0);
      if (r < best_r) {
        best_r = r;
        best.assign(combo.begin(), combo.end());
      }
      return;
    }
    const PointId from = combo[level - 1] + 1;
    const PointId to = static_cast<PointId>(n - (k - level) + 1);
    for (PointId c = from; c < to; ++c) {
      enter(level, c);
      recurse(level + 1);
    }
  }

  void run(PointId first) {
    enter(0, first);
    recurse(1);
  }
};

}  // namespace

OracleResult brute_force_opt(const Dataset& ds, std::size_t k, std::size_t z) {
  const std::size_t n = ds.size();
  KCO_REQUIRE(k >= 1 && k <= n, "brute_force_opt: need 1 <= k <= n");
  KCO_REQUIRE(z < n, "brute_force_opt: need z < n");

  double combos = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    combos *= static_cast<double>(n - k + i) / static_cast<double>(i);
    if (combos > 1e7) fail_guard("brute_force_opt: C(n, k) exceeds 10^7 subsets");
  }

  const std::size_t firsts = n - k + 1;
  std::vector<double> radii(firsts, std::numeric_limits<double>::infinity());
  std::vector<std::vector<PointId>> sets(firsts);
  parallel_for(firsts, 1, [&](std::size_t b, std::size_t e) {
    SubsetSearch s(ds, k, z);
    for (std::size_t f = b; f < e; ++f) {
      s.best_r = std::numeric_limits<double>::infinity();
      s.best.clear();
      s.run(static_cast<PointId>(f));
      radii[f] = s.best_r;
      sets[f] = s.best;
    }
  });

  std::size_t win = 0;
  for (std::size_t f = 1; f < firsts; ++f) {
    if (radii[f] < radii[win]) win = f;
  }

  OracleResult out;
  out.r_opt = radii[win];
  out.centers.ids = sets[win];
  out.excluded = phi_eps(ds, out.centers, z, 0.0).excluded;
  return out;
}

Ball meb(const double* pts, std::size_t m, std::size_t d, double delta) {
  KCO_REQUIRE(m >= 1, "meb: needs at least one point");
  KCO_REQUIRE(d >= 1, "meb: needs dimension >= 1");
  KCO_REQUIRE(delta > 0.0 && delta < 1.0, "meb: need delta in (0, 1)");

  Ball b;
  b.center.assign(pts, pts + d);
  std::vector<double> dists(m);
  const auto scan = [&]() {
    parallel_for(m, 1024, [&](std::size_t lo, std::size_t hi) {
      simd::kernels().dists_to(pts + lo * d, hi - lo, d, b.center.data(),
                               dists.data() + lo);
    });
    std::size_t far = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (dists[i] > dists[far]) far = i;
    }
    return far;
  };

  const std::size_t iters =
      static_cast<std::size_t>(std::ceil(1.0 / (delta * delta)));
  for (std::size_t i = 1; i <= iters; ++i) {
    const std::size_t far = scan();
    const double* p = pts + far * d;
    const double step = 1.0 / static_cast<double>(i + 1);
    for (std::size_t c = 0; c < d; ++c) {
      b.center[c] += (p[c] - b.center[c]) * step;
    }
  }
  b.radius = dists[scan()];
  return b;
}

Ball meb(const Dataset& ds, std::span<const PointId> ids, double delta) {
  KCO_REQUIRE(ds.is_euclidean(), "meb: Euclidean data only");
  KCO_REQUIRE(!ids.empty(), "meb: needs at least one point");
  const std::size_t d = ds.dim();
  std::vector<double> buf(ids.size() * d);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ds.check_id(ids[i]);
    const double* src = ds.row(ids[i]);
    std::copy(src, src + d, buf.begin() + static_cast<std::ptrdiff_t>(i * d));
  }
  return meb(buf.data(), ids.size(), d, delta);
}

}  // namespace kco
