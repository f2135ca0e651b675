#include "kco/coreset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "kco/cost.hpp"
#include "kco/greedy.hpp"

namespace kco {

std::uint64_t Coreset::total_weight() const {
  std::uint64_t s = 0;
  for (std::uint64_t w : weights) s += w;
  return s;
}

std::size_t coreset_centers_target(const OutlierParams& p) {
  const double v = std::pow(2.0 / p.mu, p.rho) * static_cast<double>(p.k);
  KCO_REQUIRE(std::isfinite(v), "coreset: center target overflows");
  if (v >= 1e15) fail_guard("coreset: center target too large, override l");
  return static_cast<std::size_t>(std::ceil(v));
}

namespace {

Coreset whole_set(const Dataset& ds, std::size_t l, std::uint64_t seed) {
  const std::size_t n = ds.size();
  Coreset cs;
  cs.points.resize(n);
  std::iota(cs.points.begin(), cs.points.end(), PointId{0});
  cs.weights.assign(n, 1);
  cs.rep_map = cs.points;
  cs.r_tilde = 0.0;
  cs.whole_set_fallback = true;
  cs.l = l;
  cs.seed = seed;
  return cs;
}

}  // namespace

Coreset build_coreset(const Dataset& ds, const OutlierParams& p,
                      const CoresetOptions& opt) {
  const std::size_t n = ds.size();
  p.validate(n);
  KCO_REQUIRE(p.z == 0 || opt.eps > 0.0, "coreset: need eps > 0 when z > 0");
  KCO_REQUIRE(opt.eps >= 0.0, "coreset: need eps >= 0");

  const std::size_t l = opt.l_override > 0 ? opt.l_override : coreset_centers_target(p);
  if (l >= n) return whole_set(ds, l, p.seed);

  const double ld = static_cast<double>(l);
  const std::size_t t =
      static_cast<std::size_t>(std::ceil((ld + std::sqrt(ld)) / (1.0 - p.eta)));

  OutlierParams q = p;
  q.k = l;
  q.eps = opt.eps;
  const GreedyRun run = bicriteria(ds, q, t, nullptr, {}, /*track_reps=*/true);

  // Points within r_tilde of the greedy centers snap onto their nearest
  // center; the rest stay verbatim with unit weight.
  const double r_tilde = phi_radius(run.nearest, p.z, opt.eps);

  std::vector<std::uint64_t> count(n, 0);
  std::vector<PointId> rep_map(n);
  std::vector<PointId> far;
  for (std::size_t i = 0; i < n; ++i) {
    if (run.nearest[i] <= r_tilde) {
      const PointId r = run.reps[i];
      count[r] += 1;
      rep_map[i] = r;
    } else {
      far.push_back(static_cast<PointId>(i));
      rep_map[i] = static_cast<PointId>(i);
    }
  }

  Coreset cs;
  for (PointId c : run.centers.ids) {
    if (count[c] > 0) {  // a duplicate center can end up representing nothing
      cs.points.push_back(c);
      cs.weights.push_back(count[c]);
    }
  }
  for (PointId f : far) {
    cs.points.push_back(f);
    cs.weights.push_back(1);
  }
  cs.r_tilde = r_tilde;
  cs.rep_map = std::move(rep_map);
  cs.l = l;
  cs.t = t;
  cs.seed = p.seed;
  return cs;
}

double coreset_phi0(const Dataset& ds, const Coreset& cs, const CenterSet& e,
                    std::size_t z) {
  KCO_REQUIRE(!e.empty(), "coreset_phi0: center set must be nonempty");
  KCO_REQUIRE(!cs.points.empty(), "coreset_phi0: empty summary");
  for (PointId c : e.ids) ds.check_id(c);

  const std::size_t m = cs.points.size();
  std::vector<double> nearest(m);
  for (std::size_t i = 0; i < m; ++i) {
    double best = ds.dist(cs.points[i], e.ids[0]);
    for (std::size_t j = 1; j < e.ids.size(); ++j) {
      best = std::min(best, ds.dist(cs.points[i], e.ids[j]));
    }
    nearest[i] = best;
  }
  Weights w(cs.weights.begin(), cs.weights.end());
  KCO_REQUIRE(z < cs.total_weight(), "coreset_phi0: need z below the total weight");
  return phi_radius(nearest, z, 0.0, &w);
}

Coreset composable_build(const Dataset& ds,
                         std::span<const std::vector<PointId>> parts,
                         const OutlierParams& p, const CoresetOptions& opt) {
  const std::size_t n = ds.size();
  p.validate(n);

  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (const auto& part : parts) {
    for (PointId id : part) {
      ds.check_id(id);
      KCO_REQUIRE(!seen[id], "composable_build: parts must be disjoint");
      seen[id] = 1;
      ++covered;
    }
  }
  KCO_REQUIRE(covered == n, "composable_build: parts must cover every point");

  Coreset out;
  out.rep_map.assign(n, kNoPoint);
  out.l = opt.l_override > 0 ? opt.l_override : coreset_centers_target(p);
  out.seed = p.seed;

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    if (part.empty()) {
      std::fprintf(stderr, "kco: composable_build: part %zu is empty, skipped\n", i);
      continue;
    }
    OutlierParams q = p;
    q.seed = p.seed + i;

    Coreset local;
    Dataset sub = subset(ds, part);
    if (part.size() <= p.z || p.k > part.size()) {
      // Too small to run the greedy construction against the full exclusion
      // budget; the part stands in for itself.
      local = whole_set(sub, out.l, q.seed);
    } else {
      local = build_coreset(sub, q, opt);
    }

    for (std::size_t j = 0; j < local.points.size(); ++j) {
      out.points.push_back(part[local.points[j]]);
      out.weights.push_back(local.weights[j]);
    }
    for (std::size_t j = 0; j < part.size(); ++j) {
      out.rep_map[part[j]] = part[local.rep_map[j]];
    }
    out.r_tilde = std::max(out.r_tilde, local.r_tilde);
    out.t = std::max(out.t, local.t);
    out.whole_set_fallback = out.whole_set_fallback || local.whole_set_fallback;
  }
  return out;
}

}  // namespace kco
