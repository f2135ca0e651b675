#include "kco/sampling.hpp"

#include <cmath>

#include "kco/rng.hpp"

namespace kco {
namespace {

std::size_t ceil_to_size(double v, const char* what) {
  KCO_REQUIRE(std::isfinite(v) && v >= 0.0, what);
  const double c = std::ceil(v);
  if (c >= 1e15) fail_guard(std::string(what) + ": size overflows");
  return static_cast<std::size_t>(c);
}

void check_common(double eps, double gamma, std::size_t k, double c) {
  KCO_REQUIRE(eps > 0.0 && eps <= 0.5, "sampling: need eps in (0, 1/2]");
  KCO_REQUIRE(gamma > 0.0 && gamma < 1.0, "sampling: need gamma in (0, 1)");
  KCO_REQUIRE(k >= 1, "sampling: need k >= 1");
  KCO_REQUIRE(c > 0.0, "sampling: need c > 0");
}

}  // namespace

std::size_t sample_size(double eps, double gamma, std::size_t k, std::size_t d,
                        double lambda, double c) {
  check_common(eps, gamma, k, c);
  KCO_REQUIRE(d >= 1, "sampling: need dimension >= 1");
  KCO_REQUIRE(lambda > 0.0 && lambda < 1.0, "sampling: need lambda in (0, 1)");
  const double kd = static_cast<double>(k);
  const double dd = static_cast<double>(d);
  const double complexity = kd * dd * std::log2(2.0 * kd) *
                            std::log(2.0 * kd * dd / (eps * gamma));
  const double v =
      c / (eps * eps * gamma) * (complexity + std::log(1.0 / lambda));
  return ceil_to_size(v, "sample_size");
}

std::size_t sample_size_metric(double eps, double gamma, std::size_t k,
                               std::size_t n, double c) {
  check_common(eps, gamma, k, c);
  KCO_REQUIRE(n >= 2, "sampling: need n >= 2");
  const double v = c * static_cast<double>(k) * std::log(static_cast<double>(n)) /
                   (eps * eps * gamma);
  return ceil_to_size(v, "sample_size_metric");
}

Reduction uniform_reduce(const Dataset& ds, std::size_t k, double eps,
                         double gamma, double lambda, double c,
                         std::uint64_t seed) {
  const std::size_t n = ds.size();
  KCO_REQUIRE(n >= 1, "uniform_reduce: empty dataset");

  Reduction r;
  r.plan.eps = eps;
  r.plan.gamma = gamma;
  r.plan.lambda = lambda;
  r.plan.c = c;
  r.plan.k = k;
  r.plan.dim = ds.is_euclidean() ? ds.dim() : 0;
  r.plan.sample_size = ds.is_euclidean()
                           ? sample_size(eps, gamma, k, ds.dim(), lambda, c)
                           : sample_size_metric(eps, gamma, k, n, c);
  r.plan.vacuous = r.plan.sample_size >= n;
  r.plan.drawn = std::min(r.plan.sample_size, n);
  r.plan.z_prime = ceil_to_size((1.0 + eps) * gamma * static_cast<double>(r.plan.drawn),
                                "uniform_reduce: z'");

  Rng rng(seed);
  r.ids = sample_indices(rng, n, r.plan.drawn);
  r.sample = subset(ds, r.ids);
  return r;
}

Reduction uniform_reduce(const Dataset& ds, const OutlierParams& p,
                         double lambda, double c) {
  p.validate(ds.size());
  KCO_REQUIRE(p.z >= 1, "uniform_reduce: needs z >= 1 (gamma would be zero)");
  return uniform_reduce(ds, p.k, p.eps, p.gamma(ds.size()), lambda, c, p.seed);
}

}  // namespace kco
