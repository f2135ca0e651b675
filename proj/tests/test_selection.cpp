#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "kco/rng.hpp"
#include "kco/selection.hpp"

namespace {

// Full-sort reference for the partition-based farthest_subset.
std::vector<kco::PointId> farthest_by_sort(const std::vector<double>& dists,
                                           std::size_t m) {
  std::vector<kco::PointId> idx(dists.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<kco::PointId>(i);
  std::stable_sort(idx.begin(), idx.end(), [&](kco::PointId a, kco::PointId b) {
    return dists[a] > dists[b];
  });
  idx.resize(m);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

TEST_CASE("farthest_subset picks the largest distances, ties by id") {
  const std::vector<double> d{5.0, 1.0, 5.0, 3.0};
  CHECK(kco::farthest_subset(d, 1) == std::vector<kco::PointId>{0});
  CHECK(kco::farthest_subset(d, 2) == std::vector<kco::PointId>{0, 2});
  CHECK(kco::farthest_subset(d, 3) == std::vector<kco::PointId>{0, 2, 3});
  CHECK(kco::farthest_subset(d, 4) == std::vector<kco::PointId>{0, 1, 2, 3});
}

TEST_CASE("farthest_subset matches a full sort on random data with ties") {
  kco::Rng rng(61);
  for (int rep = 0; rep < 80; ++rep) {
    const std::size_t n = 1 + rng.below(50);
    std::vector<double> d(n);
    for (double& x : d) x = std::floor(rng.unit() * 8.0);
    const std::size_t m = 1 + rng.below(n);
    CHECK(kco::farthest_subset(d, m) == farthest_by_sort(d, m));
  }
}

TEST_CASE("farthest_point breaks ties toward the smaller id") {
  CHECK(kco::farthest_point(std::vector<double>{3.0, 7.0, 7.0}) == 1);
  CHECK(kco::farthest_point(std::vector<double>{9.0}) == 0);
}

TEST_CASE("selection guards") {
  const std::vector<double> d{1.0, 2.0};
  CHECK_THROWS_AS(kco::farthest_subset(d, 0), kco::contract_error);
  CHECK_THROWS_AS(kco::farthest_subset(d, 3), kco::contract_error);
  CHECK_THROWS_AS(kco::farthest_point(std::vector<double>{}), kco::contract_error);
  CHECK_THROWS_AS(kco::farthest_weighted_prefix(std::vector<double>{}, nullptr, 1.0),
                  kco::contract_error);
}

TEST_CASE("weighted prefix reaches the budget and stops") {
  const std::vector<double> d{10.0, 9.0, 8.0};
  const kco::Weights w{2.0, 2.0, 2.0};

  CHECK(kco::farthest_weighted_prefix(d, &w, 0.0).empty());
  CHECK(kco::farthest_weighted_prefix(d, &w, 2.0) == std::vector<kco::PointId>{0});
  // Budget 3 is straddled: the second point is included to reach it.
  CHECK(kco::farthest_weighted_prefix(d, &w, 3.0) == std::vector<kco::PointId>{0, 1});
  CHECK(kco::farthest_weighted_prefix(d, &w, 6.0) ==
        std::vector<kco::PointId>{0, 1, 2});
  CHECK(kco::farthest_weighted_prefix(d, &w, 100.0) ==
        std::vector<kco::PointId>{0, 1, 2});
}

TEST_CASE("unit weights and integral budget reduce to farthest_subset") {
  kco::Rng rng(67);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + rng.below(30);
    std::vector<double> d(n);
    for (double& x : d) x = std::floor(rng.unit() * 6.0);
    const std::size_t m = 1 + rng.below(n);
    CHECK(kco::farthest_weighted_prefix(d, nullptr, static_cast<double>(m)) ==
          kco::farthest_subset(d, m));
  }
}

TEST_CASE("weighted prefix ties break toward the smaller id") {
  const std::vector<double> d{5.0, 5.0, 1.0};
  CHECK(kco::farthest_weighted_prefix(d, nullptr, 1.0) ==
        std::vector<kco::PointId>{0});
  CHECK(kco::farthest_weighted_prefix(d, nullptr, 2.0) ==
        std::vector<kco::PointId>{0, 1});
}
