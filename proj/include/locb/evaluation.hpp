#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "locb/environment.hpp"
#include "locb/estimator.hpp"
#include "locb/rng.hpp"
#include "locb/types.hpp"

namespace locb {

/// Batch ridge solution (I + sum x x^T)^{-1} (sum r x). Zero events give 0.
Vec batch_theta(std::span<const Observation> events, std::size_t dim);

struct KMeansResult {
  std::vector<std::size_t> assignment;
  std::vector<Vec> centroids;
  double inertia = 0.0;
  /// Inertia after each assignment step of the winning restart.
  std::vector<double> inertia_trace;
};

/// Lloyd iteration with K distinct sampled points as initial centroids,
/// best-inertia over `restarts`. Throws std::invalid_argument when K exceeds
/// the number of points or K is zero.
KMeansResult kmeans(std::span<const Vec> points, std::size_t k, Rng& rng, std::size_t max_iters = 100,
                    std::size_t restarts = 50);

/// Every pair strictly closer than gamma.
bool is_gamma_cluster(std::span<const UserIndex> ids, std::span<const Vec> thetas, double gamma);

/// Large gamma-cluster inside `ids`: greedy nearest-first expansion from the
/// medoid, repeated from every other start, keeping the largest result
/// (medoid start wins ties). Result is sorted and always satisfies
/// is_gamma_cluster.
std::vector<UserIndex> extract_gamma_cluster(std::span<const UserIndex> ids,
                                             std::span<const Vec> thetas, double gamma);

struct AccuracyReport {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

/// For each truth cluster pick the returned set with the highest F1 (first
/// wins ties); report the mean F1, precision and recall of the picked sets.
AccuracyReport f1_accuracy(std::span<const std::vector<UserIndex>> returned,
                           std::span<const std::vector<UserIndex>> truth);

/// Best expected reward over arms minus the chosen arm's, for the user's true theta.
double regret_step_synthetic(const SyntheticWorld& world, UserIndex user, std::span<const Vec> arms,
                             std::size_t chosen);

/// 1 - logged reward of the chosen arm; pools carry exactly one positive.
double regret_step_replay(std::span<const int> pool_rewards, std::size_t chosen);

class RegretLedger {
 public:
  void record(double instantaneous);
  std::size_t rounds() const { return instantaneous_.size(); }
  double cumulative() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
  std::span<const double> instantaneous() const { return instantaneous_; }
  std::span<const double> cumulative_series() const { return cumulative_; }

 private:
  std::vector<double> instantaneous_;
  std::vector<double> cumulative_;
};

struct GroundTruth {
  std::vector<Vec> thetas;
  std::vector<std::vector<UserIndex>> clusters;
};

/// Batch theta per user, K-means over users, then one maximal-size
/// gamma-cluster per K-means cluster. Every returned cluster is verified.
GroundTruth derive_ground_truth(const ReplayLog& log, std::size_t k, double gamma, Rng& rng,
                                std::size_t restarts = 50, std::size_t max_iters = 100);

/// Truth for a synthetic world judged at `gamma`: each generated cluster,
/// reduced to its largest gamma-cluster when its diameter reaches gamma.
std::vector<std::vector<UserIndex>> synthetic_truth(const SyntheticWorld& world, double gamma);

/// "label: id,id,..." lines with external ids.
void write_ground_truth(std::ostream& out, const GroundTruth& truth, std::span<const std::uint64_t> ids);

}  // namespace locb
