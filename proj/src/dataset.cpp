#include "kco/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kco/simd/kernels.hpp"

namespace kco {

void validate_weights(const Weights& w, std::size_t n) {
  KCO_REQUIRE(w.size() == n, "weights: size must match point count");
  for (double v : w) {
    KCO_REQUIRE(std::isfinite(v) && v > 0.0, "weights: entries must be positive and finite");
  }
}

Dataset Dataset::euclidean(std::vector<double> coords, std::size_t dim) {
  KCO_REQUIRE(dim >= 1, "Dataset: dimension must be at least 1");
  KCO_REQUIRE(!coords.empty() && coords.size() % dim == 0,
              "Dataset: coordinate count must be a positive multiple of dim");
  for (double v : coords) {
    KCO_REQUIRE(std::isfinite(v), "Dataset: coordinates must be finite");
  }
  const std::size_t n = coords.size() / dim;
  KCO_REQUIRE(n <= std::numeric_limits<PointId>::max(), "Dataset: too many points");
  return Dataset(std::move(coords), n, dim);
}

Dataset Dataset::metric(std::vector<double> matrix, std::size_t n) {
  KCO_REQUIRE(n >= 1, "Dataset: metric needs at least one point");
  KCO_REQUIRE(matrix.size() == n * n, "Dataset: metric matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    KCO_REQUIRE(matrix[i * n + i] == 0.0, "Dataset: metric diagonal must be zero");
  }
  for (double v : matrix) {
    KCO_REQUIRE(std::isfinite(v) && v >= 0.0,
                "Dataset: metric entries must be nonnegative and finite");
  }
  return Dataset(std::move(matrix), n, 0);
}

std::size_t Dataset::dim() const {
  KCO_REQUIRE(dim_ > 0, "Dataset: dim() is only defined for Euclidean data");
  return dim_;
}

double Dataset::dist(PointId p, PointId q) const {
  check_id(p);
  check_id(q);
  if (is_euclidean()) {
    return std::sqrt(simd::kernels().sqdist(row(p), row(q), dim_));
  }
  return data_[std::size_t{p} * n_ + q];
}

Dataset subset(const Dataset& ds, std::span<const PointId> ids) {
  KCO_REQUIRE(!ids.empty(), "subset: needs at least one point");
  for (PointId p : ids) ds.check_id(p);
  const std::size_t m = ids.size();
  if (ds.is_euclidean()) {
    const std::size_t d = ds.dim();
    std::vector<double> coords(m * d);
    for (std::size_t i = 0; i < m; ++i) {
      const double* src = ds.row(ids[i]);
      std::copy(src, src + d, coords.begin() + static_cast<std::ptrdiff_t>(i * d));
    }
    return Dataset::euclidean(std::move(coords), d);
  }
  std::vector<double> matrix(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const double* row = ds.metric_row(ids[i]);
    for (std::size_t j = 0; j < m; ++j) matrix[i * m + j] = row[ids[j]];
  }
  return Dataset::metric(std::move(matrix), m);
}

}  // namespace kco
