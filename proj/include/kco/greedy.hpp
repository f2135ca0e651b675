#pragma once

// Greedy outlier-tolerant k-center. Instead of always taking the single
// farthest point (which chases outliers), each round samples from the set of
// farthest points whose cumulative weight fills the exclusion budget
// floor((1+eps)z); most of that set is real signal whenever more than an
// eps/(1+eps) fraction of it is inliers.
//
// Variants:
//   bicriteria          t rounds, several draws per round; more than k
//                       centers, cost <= 2 r_opt with constant probability.
//   doubling_bicriteria same, with the round count sized by the doubling
//                       dimension rho so the cost bound tightens to r_opt.
//   two_approx          exactly k centers, one draw per round; succeeds with
//                       probability ~ (eps/(1+eps))^(k-1), meant to be
//                       restarted.
//   with_restarts       two_approx repeated over consecutive seeds, keeping
//                       the best run.
//
// With z = 0 every variant degenerates to farthest-point traversal: the
// sample set is the single farthest point. eps = 0 with z > 0 is rejected
// (the per-round sample size is undefined).
//
// An optional weight vector makes every draw proportional to point weight and
// switches the cost to its weighted form; unit weights reproduce the
// unweighted behaviour exactly. Optional ground-truth labels (>= 0 real
// cluster, -1 outlier) add per-round coverage counts to the trace.

#include <optional>
#include <span>
#include <vector>

#include "kco/clustering.hpp"
#include "kco/cost.hpp"
#include "kco/params.hpp"

namespace kco {

struct RoundRecord {
  std::size_t round = 0;    // 1-based; round 1 is the initial sample
  std::size_t e_size = 0;   // centers after this round
  double q_dist = 0.0;      // min distance from the sampled-from set to E; NaN in round 1
  double phi = 0.0;         // cost snapshot at the run's eps, after this round
  double phi0 = 0.0;        // cost snapshot at eps = 0, after this round
  long lambda = -1;         // distinct true clusters touched by E; -1 without labels
};

struct RoundTrace {
  std::vector<RoundRecord> rounds;
};

struct GreedyRun {
  CenterSet centers;
  RoundTrace trace;
  std::vector<double> nearest;  // d(p, E) for the final E
  std::vector<PointId> reps;    // nearest center per point (smaller id on ties);
                                // filled only when requested
};

GreedyRun bicriteria(const Dataset& ds, const OutlierParams& p, std::size_t t,
                     const Weights* w = nullptr, std::span<const int> labels = {},
                     bool track_reps = false);

// Round count for doubling_bicriteria: ceil((2^rho k + 2^(rho/2) sqrt(k)) / (1-eta)).
// rho = 0 reduces to the plain bicriteria count ceil((k + sqrt(k)) / (1-eta)).
std::size_t doubling_rounds(std::size_t k, double rho, double eta);

GreedyRun doubling_bicriteria(const Dataset& ds, const OutlierParams& p,
                              const Weights* w = nullptr,
                              std::span<const int> labels = {});

GreedyRun two_approx(const Dataset& ds, const OutlierParams& p,
                     const Weights* w = nullptr, std::span<const int> labels = {});

// Restart count that makes the overall success probability constant:
// ceil(3 (1/(1-gamma)) ((1+eps)/eps)^(k-1)). Needs eps > 0 when z > 0.
std::size_t default_trials(const OutlierParams& p, std::size_t n);

struct RestartOutcome {
  ClusteringResult best;
  std::vector<double> trial_radii;  // selection cost per trial, in trial order
};

// Runs `trials` independent two_approx attempts on seeds p.seed, p.seed+1, ...
// and keeps the run with the smallest cost (ties to the earliest trial).
// trials = 0 means default_trials. select_eps overrides the eps used for
// ranking only; the algorithm itself still runs at p.eps.
RestartOutcome with_restarts(const Dataset& ds, const OutlierParams& p,
                             std::size_t trials = 0, const Weights* w = nullptr,
                             std::optional<double> select_eps = std::nullopt);

// Same restart scheme around bicriteria runs of t rounds each.
RestartOutcome bicriteria_restarts(const Dataset& ds, const OutlierParams& p,
                                   std::size_t t, std::size_t trials,
                                   const Weights* w = nullptr,
                                   std::optional<double> select_eps = std::nullopt);

// Builds the full result (exclusions, assignment) for a finished center set.
ClusteringResult finalize_clustering(const Dataset& ds, const CenterSet& e,
                                     const OutlierParams& p, std::size_t rounds,
                                     const Weights* w = nullptr,
                                     std::optional<double> eval_eps = std::nullopt);

}  // namespace kco
