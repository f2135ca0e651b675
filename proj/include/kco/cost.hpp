#pragma once

// Clustering cost with an exclusion budget. The cost of a center set is the
// largest nearest-center distance after the farthest floor((1+eps)z) weight
// units of points have been set aside as outliers.

#include <cstdint>
#include <span>
#include <vector>

#include "kco/clustering.hpp"
#include "kco/dataset.hpp"

namespace kco {

// Maintains d(p, E) for all p while centers are appended one at a time.
// Appending costs one pass over the points; a fresh recomputation would pay
// |E| passes. Optionally tracks each point's nearest center, ties resolved
// toward the smaller center id.
class NearestDistances {
 public:
  explicit NearestDistances(const Dataset& ds, bool track_reps = false);

  void add_center(PointId c);

  std::size_t center_count() const { return centers_; }

  // Requires at least one center.
  std::span<const double> values() const;

  // Requires track_reps and at least one center.
  std::span<const PointId> reps() const;

 private:
  const Dataset* ds_;
  std::vector<double> dist_;
  std::vector<PointId> rep_;
  std::vector<double> tmp_;
  std::size_t centers_ = 0;
};

// One-shot d(p, E) for every p. Errors on empty E.
std::vector<double> nearest_distances(const Dataset& ds, const CenterSet& e);

struct PhiResult {
  double radius = 0.0;
  std::vector<PointId> excluded;  // farthest first, ties by smaller id
  double budget = 0.0;            // weight allowed to be excluded
  double budget_used = 0.0;       // weight actually excluded
  bool all_excluded = false;
};

// Cost of center set e when the farthest floor((1+eps)z) weight units may be
// ignored. Weighted points are excluded whole: the excluded set is the
// maximal descending-distance prefix whose weight does not exceed the budget.
PhiResult phi_eps(const Dataset& ds, const CenterSet& e, std::size_t z, double eps,
                  const Weights* w = nullptr);

// Radius-only fast path over precomputed nearest distances.
double phi_radius(std::span<const double> nearest, std::size_t z, double eps,
                  const Weights* w = nullptr);

struct MetricViolation {
  enum class Kind { asymmetry, diagonal, triangle, negative };
  Kind kind;
  PointId a = 0;
  PointId b = 0;
  PointId c = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Checks metric axioms. Symmetry, the diagonal and nonnegativity are checked
// exhaustively; the triangle inequality on `trials` sampled triples.
std::vector<MetricViolation> validate_metric(const Dataset& ds, std::size_t trials,
                                             std::uint64_t seed);

}  // namespace kco
