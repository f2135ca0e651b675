#include "kco/datagen.hpp"

#include <algorithm>
#include <cmath>

#include "kco/rng.hpp"
#include "kco/simd/kernels.hpp"

namespace kco {

PlantedInstance synth(const SynthParams& sp) {
  KCO_REQUIRE(sp.n >= 1, "synth: need n >= 1");
  KCO_REQUIRE(sp.dim >= 1, "synth: need dim >= 1");
  KCO_REQUIRE(sp.k >= 1, "synth: need k >= 1");
  KCO_REQUIRE(sp.z < sp.n, "synth: need z < n");
  KCO_REQUIRE(sp.n - sp.z >= sp.k, "synth: need at least one point per cluster");
  KCO_REQUIRE(sp.side > 0.0, "synth: need side > 0");
  KCO_REQUIRE(sp.variance >= 0.0, "synth: need variance >= 0");

  Rng rng(sp.seed);
  PlantedInstance inst;
  inst.params = sp;

  inst.planted_centers.assign(sp.k, std::vector<double>(sp.dim));
  for (auto& c : inst.planted_centers) {
    for (double& x : c) x = (rng.unit() - 0.5) * sp.side;
  }

  // Dirichlet(1^k) mixture weights via normalized exponentials, then a
  // multinomial split of the remaining points; the +1 floor keeps clusters
  // nonempty.
  std::vector<double> mix(sp.k);
  double mix_sum = 0.0;
  for (double& g : mix) {
    g = -std::log(1.0 - rng.unit());
    mix_sum += g;
  }
  if (mix_sum <= 0.0) {
    std::fill(mix.begin(), mix.end(), 1.0);
    mix_sum = static_cast<double>(sp.k);
  }
  std::vector<std::size_t> sizes(sp.k, 1);
  for (std::size_t t = 0; t < sp.n - sp.z - sp.k; ++t) {
    const double x = rng.unit() * mix_sum;
    double cum = 0.0;
    std::size_t pick = sp.k - 1;
    for (std::size_t j = 0; j < sp.k; ++j) {
      cum += mix[j];
      if (x < cum) {
        pick = j;
        break;
      }
    }
    sizes[pick] += 1;
  }

  const double sigma = std::sqrt(sp.variance);
  std::vector<double> coords(sp.n * sp.dim);
  inst.labels.assign(sp.n, -1);
  std::size_t at = 0;
  for (std::size_t j = 0; j < sp.k; ++j) {
    const auto& mean = inst.planted_centers[j];
    for (std::size_t i = 0; i < sizes[j]; ++i, ++at) {
      inst.labels[at] = static_cast<int>(j);
      double* row = coords.data() + at * sp.dim;
      for (std::size_t c = 0; c < sp.dim; ++c) {
        row[c] = mean[c] + sigma * rng.normal();
      }
    }
  }

  inst.cluster_balls.reserve(sp.k);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < sp.k; ++j) {
    inst.cluster_balls.push_back(
        meb(coords.data() + offset * sp.dim, sizes[j], sp.dim, sp.meb_delta));
    inst.r_opt = std::max(inst.r_opt, inst.cluster_balls.back().radius);
    offset += sizes[j];
  }

  std::size_t draws = 0;
  for (std::size_t o = 0; o < sp.z; ++o, ++at) {
    double* row = coords.data() + at * sp.dim;
    while (true) {
      if (++draws > 1000000) {
        fail_guard("synth: outlier rejection exceeded 10^6 draws (degenerate geometry)");
      }
      for (std::size_t c = 0; c < sp.dim; ++c) {
        row[c] = (rng.unit() - 0.5) * 4.0 * sp.side;
      }
      bool outside_all = true;
      for (const Ball& b : inst.cluster_balls) {
        const double d =
            std::sqrt(simd::kernels().sqdist(row, b.center.data(), sp.dim));
        if (d <= b.radius) {
          outside_all = false;
          break;
        }
      }
      if (outside_all) break;
    }
  }

  inst.data = Dataset::euclidean(std::move(coords), sp.dim);
  return inst;
}

std::size_t lambda_counter(const CenterSet& e, std::span<const int> labels) {
  std::vector<char> seen;
  std::size_t count = 0;
  for (PointId c : e.ids) {
    KCO_REQUIRE(c < labels.size(), "lambda_counter: center id outside label array");
    const int l = labels[c];
    if (l < 0) continue;
    if (seen.size() <= static_cast<std::size_t>(l)) seen.resize(l + 1, 0);
    if (!seen[l]) {
      seen[l] = 1;
      ++count;
    }
  }
  return count;
}

}  // namespace kco
