#include "kco/greedy.hpp"

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

constexpr double kQuietNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t ceil_capped(double v, std::size_t cap, const char* what) {
  KCO_REQUIRE(std::isfinite(v), what);
  const double c = std::ceil(v);
  if (c >= 1e15) fail_guard(std::string(what) + ": count overflows, pass it explicitly");
  const std::size_t s = static_cast<std::size_t>(c);
  return std::min(s, cap);
}

// State shared by the greedy variants: the center set, the running nearest
// distances, the trace, and the draw stream.
struct Runner {
  const Dataset& ds;
  const OutlierParams& p;
  const Weights* w;
  std::span<const int> labels;
  Rng rng;
  NearestDistances nd;
  CenterSet centers;
  std::vector<char> in_e;
  std::vector<char> label_seen;
  long lambda = 0;
  RoundTrace trace;
  // Restart loops discard the trace, so they turn this off to skip the
  // per-round cost selections. Draws are unaffected either way.
  bool want_trace = true;

  Runner(const Dataset& ds_, const OutlierParams& p_, const Weights* w_,
         std::span<const int> labels_, bool track_reps = false)
      : ds(ds_), p(p_), w(w_), labels(labels_), rng(p_.seed), nd(ds_, track_reps),
        in_e(ds_.size(), 0) {
    if (!labels.empty()) {
      KCO_REQUIRE(labels.size() == ds.size(), "labels: size must match point count");
      const int top = *std::max_element(labels.begin(), labels.end());
      label_seen.assign(top >= 0 ? static_cast<std::size_t>(top) + 1 : 0, 0);
    }
  }

  void add(PointId c) {
    if (in_e[c]) return;  // a drawn point may already be a center
    in_e[c] = 1;
    centers.ids.push_back(c);
    nd.add_center(c);
    if (!labels.empty() && labels[c] >= 0 && !label_seen[static_cast<std::size_t>(labels[c])]) {
      label_seen[static_cast<std::size_t>(labels[c])] = 1;
      ++lambda;
    }
  }

  void record(std::size_t round, double q_dist) {
    if (!want_trace) return;
    RoundRecord rec;
    rec.round = round;
    rec.e_size = centers.size();
    rec.q_dist = q_dist;
    rec.phi = phi_radius(nd.values(), p.z, p.eps, w);
    rec.phi0 = phi_radius(nd.values(), p.z, 0.0, w);
    rec.lambda = labels.empty() ? -1 : lambda;
    trace.rounds.push_back(rec);
  }

  // The farthest points filling the exclusion budget; with z = 0 just the
  // single farthest point.
  std::vector<PointId> query_set() const {
    const double budget = std::floor((1.0 + p.eps) * static_cast<double>(p.z));
    if (budget < 1.0) return {farthest_point(nd.values())};
    return farthest_weighted_prefix(nd.values(), w, budget);
  }

  double min_dist_over(const std::vector<PointId>& q) const {
    const auto v = nd.values();
    double m = std::numeric_limits<double>::infinity();
    for (PointId id : q) m = std::min(m, v[id]);
    return m;
  }

  std::vector<double> weights_of(const std::vector<PointId>& ids) const {
    std::vector<double> out(ids.size(), 1.0);
    if (w != nullptr) {
      for (std::size_t i = 0; i < ids.size(); ++i) out[i] = (*w)[ids[i]];
    }
    return out;
  }

  std::vector<PointId> draw_from(std::vector<PointId> ids, double want) {
    const std::size_t s = want >= static_cast<double>(ids.size())
                              ? ids.size()
                              : static_cast<std::size_t>(want);
    auto wts = weights_of(ids);
    return sample_weighted(rng, std::move(ids), std::move(wts), s);
  }

  std::vector<PointId> all_ids() const {
    std::vector<PointId> ids(ds.size());
    std::iota(ids.begin(), ids.end(), PointId{0});
    return ids;
  }

  GreedyRun finish(bool track_reps = false) {
    const auto v = nd.values();
    GreedyRun run{std::move(centers), std::move(trace), {v.begin(), v.end()}, {}};
    if (track_reps) {
      const auto rep = nd.reps();
      run.reps.assign(rep.begin(), rep.end());
    }
    return run;
  }
};

void check_greedy_params(const Dataset& ds, const OutlierParams& p, const Weights* w) {
  p.validate(ds.size());
  KCO_REQUIRE(p.z == 0 || p.eps > 0.0,
              "greedy: eps must be positive when z > 0 (per-round sample size is undefined)");
  if (w != nullptr) validate_weights(*w, ds.size());
}

double per_round_draws(const OutlierParams& p) {
  if (p.z == 0) return 1.0;
  return std::ceil((1.0 + p.eps) / p.eps * std::log(1.0 / p.eta));
}

GreedyRun bicriteria_impl(const Dataset& ds, const OutlierParams& p, std::size_t t,
                          const Weights* w, std::span<const int> labels,
                          bool track_reps, bool want_trace) {
  check_greedy_params(ds, p, w);
  KCO_REQUIRE(t >= 1, "bicriteria: need at least one round");

  Runner r(ds, p, w, labels, track_reps);
  r.want_trace = want_trace;
  const double gamma = p.gamma(ds.size());
  const std::size_t init =
      ceil_capped(std::log(1.0 / p.eta) / (1.0 - gamma), ds.size(), "bicriteria: initial sample");
  for (PointId c : r.draw_from(r.all_ids(), static_cast<double>(std::max<std::size_t>(init, 1)))) {
    r.add(c);
  }
  r.record(1, kQuietNaN);

  const double draws = per_round_draws(p);
  for (std::size_t j = 2; j <= t; ++j) {
    auto q = r.query_set();
    const double q_dist = r.min_dist_over(q);
    for (PointId c : r.draw_from(std::move(q), draws)) r.add(c);
    r.record(j, q_dist);
  }
  return r.finish(track_reps);
}

GreedyRun two_approx_impl(const Dataset& ds, const OutlierParams& p, const Weights* w,
                          std::span<const int> labels, bool want_trace) {
  check_greedy_params(ds, p, w);

  Runner r(ds, p, w, labels);
  r.want_trace = want_trace;
  r.add(r.draw_from(r.all_ids(), 1.0).front());
  r.record(1, kQuietNaN);

  for (std::size_t j = 2; j <= p.k; ++j) {
    auto q = r.query_set();
    const double q_dist = r.min_dist_over(q);
    std::erase_if(q, [&](PointId id) { return r.in_e[id] != 0; });
    if (q.empty()) {
      // Everything far is already a center; take the smallest unused id so
      // the run still returns exactly k centers.
      for (PointId id = 0; id < ds.size(); ++id) {
        if (!r.in_e[id]) {
          r.add(id);
          break;
        }
      }
    } else {
      r.add(r.draw_from(std::move(q), 1.0).front());
    }
    r.record(j, q_dist);
  }
  return r.finish();
}

}  // namespace

GreedyRun bicriteria(const Dataset& ds, const OutlierParams& p, std::size_t t,
                     const Weights* w, std::span<const int> labels, bool track_reps) {
  return bicriteria_impl(ds, p, t, w, labels, track_reps, true);
}

std::size_t doubling_rounds(std::size_t k, double rho, double eta) {
  KCO_REQUIRE(k >= 1, "doubling_rounds: need k >= 1");
  KCO_REQUIRE(rho >= 0.0, "doubling_rounds: need rho >= 0");
  KCO_REQUIRE(eta > 0.0 && eta < 1.0, "doubling_rounds: need eta in (0, 1)");
  const double kd = static_cast<double>(k);
  const double v = (std::exp2(rho) * kd + std::exp2(rho / 2.0) * std::sqrt(kd)) / (1.0 - eta);
  return ceil_capped(v, static_cast<std::size_t>(-1), "doubling_rounds");
}

GreedyRun doubling_bicriteria(const Dataset& ds, const OutlierParams& p,
                              const Weights* w, std::span<const int> labels) {
  return bicriteria(ds, p, doubling_rounds(p.k, p.rho, p.eta), w, labels);
}

GreedyRun two_approx(const Dataset& ds, const OutlierParams& p, const Weights* w,
                     std::span<const int> labels) {
  return two_approx_impl(ds, p, w, labels, true);
}

std::size_t default_trials(const OutlierParams& p, std::size_t n) {
  KCO_REQUIRE(p.eps > 0.0, "default_trials: needs eps > 0");
  const double gamma = p.gamma(n);
  const double v = 3.0 / (1.0 - gamma) *
                   std::pow((1.0 + p.eps) / p.eps, static_cast<double>(p.k) - 1.0);
  return ceil_capped(v, static_cast<std::size_t>(-1), "default_trials");
}

namespace {

RestartOutcome run_restarts(const Dataset& ds, const OutlierParams& p,
                            std::size_t trials, const Weights* w,
                            std::optional<double> select_eps, bool use_bicriteria,
                            std::size_t t) {
  check_greedy_params(ds, p, w);
  KCO_REQUIRE(trials >= 1, "restarts: need at least one trial");
  const double sel_eps = select_eps.value_or(p.eps);

  std::vector<double> radii(trials);
  parallel_for(trials, 1, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      OutlierParams q = p;
      q.seed = p.seed + i;
      const GreedyRun run = use_bicriteria
                                ? bicriteria_impl(ds, q, t, w, {}, false, false)
                                : two_approx_impl(ds, q, w, {}, false);
      radii[i] = phi_radius(run.nearest, p.z, sel_eps, w);
    }
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < trials; ++i) {
    if (radii[i] < radii[best]) best = i;
  }

  OutlierParams q = p;
  q.seed = p.seed + best;
  const GreedyRun run = use_bicriteria ? bicriteria_impl(ds, q, t, w, {}, false, false)
                                       : two_approx_impl(ds, q, w, {}, false);
  ClusteringResult res = finalize_clustering(
      ds, run.centers, q, use_bicriteria ? t : p.k, w, sel_eps);
  return {std::move(res), std::move(radii)};
}

}  // namespace

RestartOutcome with_restarts(const Dataset& ds, const OutlierParams& p,
                             std::size_t trials, const Weights* w,
                             std::optional<double> select_eps) {
  if (trials == 0) trials = default_trials(p, ds.size());
  return run_restarts(ds, p, trials, w, select_eps, false, 0);
}

RestartOutcome bicriteria_restarts(const Dataset& ds, const OutlierParams& p,
                                   std::size_t t, std::size_t trials,
                                   const Weights* w,
                                   std::optional<double> select_eps) {
  KCO_REQUIRE(t >= 1, "bicriteria_restarts: need at least one round");
  return run_restarts(ds, p, trials, w, select_eps, true, t);
}

ClusteringResult finalize_clustering(const Dataset& ds, const CenterSet& e,
                                     const OutlierParams& p, std::size_t rounds,
                                     const Weights* w,
                                     std::optional<double> eval_eps) {
  KCO_REQUIRE(!e.empty(), "finalize_clustering: empty center set");
  const std::size_t n = ds.size();
  const double eps = eval_eps.value_or(p.eps);
  PhiResult pr = phi_eps(ds, e, p.z, eps, w);

  ClusteringResult res;
  res.centers = e;
  res.radius = pr.radius;
  res.excluded = std::move(pr.excluded);
  res.all_excluded = pr.all_excluded;
  res.rounds = rounds;
  res.seed = p.seed;

  // Assign every point to its nearest center (earliest center on ties), then
  // blank out the excluded ones.
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> arg(n, kNoPoint);
  std::vector<double> tmp(ds.is_euclidean() ? n : 0);
  for (std::uint32_t ci = 0; ci < e.ids.size(); ++ci) {
    const PointId c = e.ids[ci];
    const double* dists;
    if (ds.is_euclidean()) {
      const std::size_t d = ds.dim();
      parallel_for(n, 1024, [&](std::size_t b, std::size_t en) {
        simd::kernels().dists_to(ds.rows() + b * d, en - b, d, ds.row(c), tmp.data() + b);
      });
      dists = tmp.data();
    } else {
      dists = ds.metric_row(c);
    }
    parallel_for(n, 16384, [&](std::size_t b, std::size_t en) {
      for (std::size_t i = b; i < en; ++i) {
        if (dists[i] < best[i]) {
          best[i] = dists[i];
          arg[i] = ci;
        }
      }
    });
  }
  for (PointId ex : res.excluded) arg[ex] = kNoPoint;
  res.assignment = std::move(arg);
  return res;
}

}  // namespace kco
