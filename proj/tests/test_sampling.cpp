// Tests for uniform sample-size planning and dataset reduction.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>

#include "kco/baselines.hpp"
#include "kco/cost.hpp"
#include "kco/datagen.hpp"
#include "kco/dataset.hpp"
#include "kco/common.hpp"
#include "kco/greedy.hpp"
#include "kco/sampling.hpp"
#include "support/oracles.hpp"

using namespace kco;

TEST_CASE("sample_size matches the planning formula on pinned inputs") {
  // c/(eps^2 gamma) * (k d log2(2k) ln(2kd/(eps gamma)) + ln(1/lambda))
  // with eps=1/2, gamma=1/2, k=1, d=1, lambda=1/e:
  // 8 * (ln 8 + 1) = 24.63... -> 25.
  CHECK(sample_size(0.5, 0.5, 1, 1, std::exp(-1.0), 1.0) == 25);

  // Independent recomputation on a second input set.
  const double eps = 0.25, gamma = 0.1, lambda = 0.05, c = 2.0;
  const std::size_t k = 3, d = 4;
  const double complexity = 3.0 * 4.0 * std::log2(6.0) *
                            std::log(2.0 * 3 * 4 / (eps * gamma));
  const double v =
      c / (eps * eps * gamma) * (complexity + std::log(1.0 / lambda));
  CHECK(sample_size(eps, gamma, k, d, lambda, c) ==
        static_cast<std::size_t>(std::ceil(v)));

  // Doubling c doubles the bound (up to the ceil).
  const std::size_t s1 = sample_size(0.5, 0.2, 2, 3, 0.1, 1.0);
  const std::size_t s2 = sample_size(0.5, 0.2, 2, 3, 0.1, 2.0);
  CHECK(s2 >= 2 * s1 - 1);
  CHECK(s2 <= 2 * s1 + 1);

  // Tightening eps or gamma can only grow the requirement.
  CHECK(sample_size(0.25, 0.2, 2, 3, 0.1, 1.0) >= s1);
  CHECK(sample_size(0.5, 0.1, 2, 3, 0.1, 1.0) >= s1);
}

TEST_CASE("sample_size_metric matches its formula") {
  // c k ln(n) / (eps^2 gamma), c=1, k=2, n=100, eps=1/2, gamma=1/2:
  // 2 ln(100) / 0.125 = 73.68... -> 74.
  CHECK(sample_size_metric(0.5, 0.5, 2, 100, 1.0) == 74);

  const double v = 0.5 * 5.0 * std::log(1000.0) / (0.4 * 0.4 * 0.05);
  CHECK(sample_size_metric(0.4, 0.05, 5, 1000, 0.5) ==
        static_cast<std::size_t>(std::ceil(v)));
}

TEST_CASE("sample-size preconditions reject out-of-range inputs") {
  CHECK_THROWS_AS(sample_size(0.6, 0.5, 1, 1, 0.1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.0, 0.5, 1, 1, 0.1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(-0.1, 0.5, 1, 1, 0.1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.5, 0.0, 1, 1, 0.1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.5, 1.0, 1, 1, 0.1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.5, 0.5, 0, 1, 0.1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.5, 0.5, 1, 0, 0.1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.5, 0.5, 1, 1, 0.0, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.5, 0.5, 1, 1, 1.0, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size(0.5, 0.5, 1, 1, 0.1, 0.0), contract_error);
  CHECK_THROWS_AS(sample_size_metric(0.5, 0.5, 1, 1, 1.0), contract_error);
  CHECK_THROWS_AS(sample_size_metric(0.7, 0.5, 1, 100, 1.0), contract_error);
}

namespace {

Dataset grid_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> xs;
  xs.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(rng.unit() * 100.0);
    xs.push_back(rng.unit() * 100.0);
  }
  return Dataset::euclidean(std::move(xs), 2);
}

}  // namespace

TEST_CASE("uniform_reduce draws an ascending id sample with matching rows") {
  const Dataset ds = grid_points(800, 11);
  // Small c keeps the plan well below n so the draw is a real subsample.
  const Reduction r = uniform_reduce(ds, 2, 0.5, 0.1, 0.1, 0.01, 5);

  CHECK_FALSE(r.plan.vacuous);
  CHECK(r.plan.drawn == r.plan.sample_size);
  CHECK(r.plan.drawn < ds.size());
  CHECK(r.plan.dim == 2);
  CHECK(r.plan.k == 2);
  CHECK(r.ids.size() == r.plan.drawn);
  CHECK(r.sample.size() == r.plan.drawn);
  CHECK(std::is_sorted(r.ids.begin(), r.ids.end()));
  CHECK(std::adjacent_find(r.ids.begin(), r.ids.end()) == r.ids.end());
  for (PointId id : r.ids) CHECK(id < ds.size());

  // Every sampled row is a bit-exact copy of its source row.
  for (std::size_t i = 0; i < r.ids.size(); ++i) {
    const double* src = ds.row(r.ids[i]);
    const double* dst = r.sample.row(i);
    CHECK(std::memcmp(src, dst, 2 * sizeof(double)) == 0);
  }

  // Budget scaling: z' = ceil((1+eps) gamma |S|).
  const double want = (1.0 + 0.5) * 0.1 * static_cast<double>(r.plan.drawn);
  CHECK(r.plan.z_prime == static_cast<std::size_t>(std::ceil(want)));
}

TEST_CASE("uniform_reduce is deterministic in the seed") {
  const Dataset ds = grid_points(500, 3);
  const Reduction a = uniform_reduce(ds, 2, 0.5, 0.1, 0.1, 0.01, 42);
  const Reduction b = uniform_reduce(ds, 2, 0.5, 0.1, 0.1, 0.01, 42);
  const Reduction c = uniform_reduce(ds, 2, 0.5, 0.1, 0.1, 0.01, 43);
  CHECK(a.ids == b.ids);
  CHECK(a.ids != c.ids);
}

TEST_CASE("a plan that wants more points than exist keeps the whole set") {
  const Dataset ds = grid_points(40, 9);
  const Reduction r = uniform_reduce(ds, 3, 0.5, 0.1, 0.1, 1.0, 1);
  CHECK(r.plan.vacuous);
  CHECK(r.plan.sample_size >= ds.size());
  CHECK(r.plan.drawn == ds.size());
  CHECK(r.ids.size() == ds.size());
  for (std::size_t i = 0; i < r.ids.size(); ++i) CHECK(r.ids[i] == i);
}

TEST_CASE("metric inputs use the dimension-free plan") {
  Rng rng(17);
  const Dataset ds = oracle::random_metric(rng, 60);
  const Reduction r = uniform_reduce(ds, 2, 0.5, 0.2, 0.1, 0.05, 7);
  CHECK(r.plan.dim == 0);
  CHECK(r.plan.sample_size == sample_size_metric(0.5, 0.2, 2, 60, 0.05));
  CHECK_FALSE(r.sample.is_euclidean());
  // Pairwise distances survive the subset bit-for-bit.
  for (std::size_t i = 0; i < r.ids.size(); ++i)
    for (std::size_t j = 0; j < r.ids.size(); ++j)
      CHECK(r.sample.dist(i, j) == ds.dist(r.ids[i], r.ids[j]));
}

TEST_CASE("the params overload derives gamma from z/n and requires z >= 1") {
  const Dataset ds = grid_points(300, 5);
  OutlierParams p;
  p.k = 2;
  p.z = 30;
  p.eps = 0.5;  // the sampling bound needs eps <= 1/2
  p.seed = 99;
  const Reduction a = uniform_reduce(ds, p, 0.1, 0.02);
  const Reduction b = uniform_reduce(ds, 2, 0.5, 0.1, 0.1, 0.02, 99);
  CHECK(a.ids == b.ids);
  CHECK(a.plan.gamma == doctest::Approx(0.1));

  p.z = 0;
  CHECK_THROWS_AS(uniform_reduce(ds, p, 0.1, 0.02), contract_error);
}

TEST_CASE("clustering the sample transfers to the full set") {
  // Planted instance: 3 clusters + 5% outliers. Cluster a modest uniform
  // sample with the scaled budget z', then score the returned centers on
  // the full set. The sample keeps every cluster populated, so the radius
  // should stay within a small factor of the planted one for most seeds.
  SynthParams sp;
  sp.n = 2000;
  sp.dim = 2;
  sp.k = 3;
  sp.z = 100;
  sp.seed = 31;
  const PlantedInstance gen = synth(sp);
  const double r_planted = gen.r_opt;
  REQUIRE(r_planted > 0.0);

  int ok = 0;
  const int kSeeds = 10;
  for (int s = 0; s < kSeeds; ++s) {
    const Reduction red =
        uniform_reduce(gen.data, 3, 0.5, 0.05, 0.1, 0.07, 1000 + s);
    REQUIRE_FALSE(red.plan.vacuous);

    OutlierParams p;
    p.k = 3;
    p.z = red.plan.z_prime;
    p.eps = 1.0;
    p.seed = 2000 + s;
    const RestartOutcome local = with_restarts(red.sample, p);

    CenterSet centers;
    for (PointId c : local.best.centers.ids) centers.ids.push_back(red.ids[c]);

    const auto full = phi_eps(gen.data, centers, sp.z, 1.0);
    if (full.radius <= 3.0 * r_planted) ++ok;
  }
  CHECK(ok >= 7);
}
