#include "kco/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kco/parallel.hpp"
#include "kco/rng.hpp"
#include "kco/selection.hpp"
#include "kco/simd/kernels.hpp"

namespace kco {
namespace {

constexpr std::size_t kRowGrain = 1024;   // rows per task for O(d) row work
constexpr std::size_t kFlatGrain = 16384; // elements per task for O(1) work

struct FartherFirst {
  std::span<const double> dists;
  bool operator()(PointId a, PointId b) const {
    if (dists[a] != dists[b]) return dists[a] > dists[b];
    return a < b;
  }
};

struct WeightedCut {
  std::vector<PointId> order;  // descending distance, ties by smaller id
  std::size_t cut = 0;         // first kept position in order
  double used = 0.0;
};

WeightedCut weighted_cut(std::span<const double> dists, const Weights& w,
                         double budget) {
  WeightedCut r;
  r.order.resize(dists.size());
  std::iota(r.order.begin(), r.order.end(), PointId{0});
  std::sort(r.order.begin(), r.order.end(), FartherFirst{dists});
  while (r.cut < r.order.size()) {
    const double wp = w[r.order[r.cut]];
    if (r.used + wp > budget) break;
    r.used += wp;
    ++r.cut;
  }
  return r;
}

}  // namespace

NearestDistances::NearestDistances(const Dataset& ds, bool track_reps)
    : ds_(&ds),
      dist_(ds.size(), std::numeric_limits<double>::infinity()) {
  if (track_reps) {
    rep_.assign(ds.size(), kNoPoint);
    if (ds.is_euclidean()) tmp_.resize(ds.size());
  }
}

void NearestDistances::add_center(PointId c) {
  ds_->check_id(c);
  const std::size_t n = ds_->size();
  const bool track = !rep_.empty();

  if (ds_->is_euclidean()) {
    const std::size_t d = ds_->dim();
    const double* pts = ds_->rows();
    const double* center = ds_->row(c);
    const auto& k = simd::kernels();
    if (!track) {
      parallel_for(n, kRowGrain, [&](std::size_t b, std::size_t e) {
        k.min_update(pts + b * d, e - b, d, center, dist_.data() + b);
      });
    } else {
      parallel_for(n, kRowGrain, [&](std::size_t b, std::size_t e) {
        k.dists_to(pts + b * d, e - b, d, center, tmp_.data() + b);
        for (std::size_t i = b; i < e; ++i) {
          if (tmp_[i] < dist_[i] || (tmp_[i] == dist_[i] && c < rep_[i])) {
            dist_[i] = tmp_[i];
            rep_[i] = c;
          }
        }
      });
    }
  } else {
    const double* row = ds_->metric_row(c);
    if (!track) {
      parallel_for(n, kFlatGrain, [&](std::size_t b, std::size_t e) {
        simd::kernels().min_inplace(dist_.data() + b, row + b, e - b);
      });
    } else {
      parallel_for(n, kFlatGrain, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          if (row[i] < dist_[i] || (row[i] == dist_[i] && c < rep_[i])) {
            dist_[i] = row[i];
            rep_[i] = c;
          }
        }
      });
    }
  }
  ++centers_;
}

std::span<const double> NearestDistances::values() const {
  KCO_REQUIRE(centers_ > 0, "NearestDistances: no centers added yet");
  return dist_;
}

std::span<const PointId> NearestDistances::reps() const {
  KCO_REQUIRE(!rep_.empty(), "NearestDistances: representative tracking is off");
  KCO_REQUIRE(centers_ > 0, "NearestDistances: no centers added yet");
  return rep_;
}

std::vector<double> nearest_distances(const Dataset& ds, const CenterSet& e) {
  KCO_REQUIRE(!e.empty(), "nearest_distances: center set must be nonempty");
  NearestDistances nd(ds);
  for (PointId c : e.ids) nd.add_center(c);
  const auto v = nd.values();
  return {v.begin(), v.end()};
}

double phi_radius(std::span<const double> nearest, std::size_t z, double eps,
                  const Weights* w) {
  const std::size_t n = nearest.size();
  KCO_REQUIRE(n > 0, "phi_radius: empty input");
  KCO_REQUIRE(eps >= 0.0, "phi_radius: need eps >= 0");

  if (w == nullptr) {
    KCO_REQUIRE(z < n, "phi_radius: need z < n");
    const double b = std::floor((1.0 + eps) * static_cast<double>(z));
    if (b >= static_cast<double>(n)) return 0.0;
    const std::size_t count = static_cast<std::size_t>(b);
    if (count == 0) return *std::max_element(nearest.begin(), nearest.end());
    std::vector<double> vals(nearest.begin(), nearest.end());
    std::nth_element(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(count),
                     vals.end(), std::greater<double>());
    return vals[count];
  }

  validate_weights(*w, n);
  KCO_REQUIRE(static_cast<double>(z) < std::accumulate(w->begin(), w->end(), 0.0),
              "phi_radius: need z below the total weight");
  const WeightedCut cut = weighted_cut(nearest, *w, (1.0 + eps) * static_cast<double>(z));
  return cut.cut < n ? nearest[cut.order[cut.cut]] : 0.0;
}

PhiResult phi_eps(const Dataset& ds, const CenterSet& e, std::size_t z, double eps,
                  const Weights* w) {
  const std::size_t n = ds.size();
  KCO_REQUIRE(eps >= 0.0, "phi_eps: need eps >= 0");
  const std::vector<double> nearest = nearest_distances(ds, e);

  PhiResult r;
  if (w == nullptr) {
    KCO_REQUIRE(z < n, "phi_eps: need z < n");
    const double b = std::floor((1.0 + eps) * static_cast<double>(z));
    r.budget = b;
    const std::size_t count =
        b >= static_cast<double>(n) ? n : static_cast<std::size_t>(b);
    if (count > 0) {
      r.excluded = farthest_subset(nearest, count);
      std::sort(r.excluded.begin(), r.excluded.end(),
                FartherFirst{std::span<const double>(nearest)});
    }
    r.budget_used = static_cast<double>(count);
    r.all_excluded = count == n;
    r.radius = r.all_excluded ? 0.0 : phi_radius(nearest, z, eps);
  } else {
    validate_weights(*w, n);
    KCO_REQUIRE(static_cast<double>(z) < std::accumulate(w->begin(), w->end(), 0.0),
                "phi_eps: need z below the total weight");
    r.budget = (1.0 + eps) * static_cast<double>(z);
    WeightedCut cut = weighted_cut(nearest, *w, r.budget);
    r.excluded.assign(cut.order.begin(),
                      cut.order.begin() + static_cast<std::ptrdiff_t>(cut.cut));
    r.budget_used = cut.used;
    r.all_excluded = cut.cut == n;
    r.radius = r.all_excluded ? 0.0 : nearest[cut.order[cut.cut]];
  }
  return r;
}

std::vector<MetricViolation> validate_metric(const Dataset& ds, std::size_t trials,
                                             std::uint64_t seed) {
  std::vector<MetricViolation> out;
  if (ds.is_euclidean()) return out;  // coordinates always satisfy the axioms

  const std::size_t n = ds.size();
  for (PointId a = 0; a < n; ++a) {
    if (ds.dist(a, a) != 0.0) {
      out.push_back({MetricViolation::Kind::diagonal, a, a, a, ds.dist(a, a), 0.0});
    }
    for (PointId b = a + 1; b < n; ++b) {
      if (ds.dist(a, b) != ds.dist(b, a)) {
        out.push_back({MetricViolation::Kind::asymmetry, a, b, b, ds.dist(a, b),
                       ds.dist(b, a)});
      }
    }
  }

  // Triangle inequality on sampled triples, with a hair of relative slack so
  // metrics produced by rounded arithmetic do not trip it.
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PointId a = static_cast<PointId>(rng.below(n));
    const PointId b = static_cast<PointId>(rng.below(n));
    const PointId c = static_cast<PointId>(rng.below(n));
    const double lhs = ds.dist(a, c);
    const double rhs = ds.dist(a, b) + ds.dist(b, c);
    if (lhs > rhs + 1e-12 * std::max(1.0, rhs)) {
      out.push_back({MetricViolation::Kind::triangle, a, b, c, lhs, rhs});
    }
  }
  return out;
}

}  // namespace kco
