#pragma once

// Point sets. Two storage modes share one interface: Euclidean rows
// (row-major n x d doubles, distances computed on demand) and an explicit
// metric (dense n x n matrix, distances looked up).

#include <cstddef>
#include <span>
#include <vector>

#include "kco/common.hpp"

namespace kco {

// Per-point multiplicities. Positive finite doubles; the library only ever
// produces integral values but accepts any positive weight.
using Weights = std::vector<double>;

void validate_weights(const Weights& w, std::size_t n);

class Dataset {
 public:
  // Empty shell so aggregates can hold a Dataset before it is filled in.
  Dataset() = default;

  static Dataset euclidean(std::vector<double> coords, std::size_t dim);
  static Dataset metric(std::vector<double> matrix, std::size_t n);

  bool is_euclidean() const { return dim_ > 0; }
  std::size_t size() const { return n_; }

  // Euclidean only.
  std::size_t dim() const;
  const double* row(PointId p) const { return data_.data() + std::size_t{p} * dim_; }
  const double* rows() const { return data_.data(); }

  // Metric only: row p of the distance matrix.
  const double* metric_row(PointId p) const { return data_.data() + std::size_t{p} * n_; }

  double dist(PointId p, PointId q) const;

  void check_id(PointId p) const {
    KCO_REQUIRE(p < n_, "Dataset: point id out of range");
  }

 private:
  Dataset(std::vector<double> data, std::size_t n, std::size_t dim)
      : data_(std::move(data)), n_(n), dim_(dim) {}

  std::vector<double> data_;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;  // 0 marks metric mode
};

// New dataset holding the given points (in the given order). Local point i
// of the result corresponds to ids[i] in the source.
Dataset subset(const Dataset& ds, std::span<const PointId> ids);

}  // namespace kco
