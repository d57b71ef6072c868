#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locb/clustering.hpp"
#include "locb/estimator.hpp"
#include "locb/types.hpp"

namespace locb {

struct PolicyDecision {
  std::size_t chosen_arm_index = 0;
  double score = 0.0;
  std::optional<UserIndex> chosen_seed;
  bool fallback_used = false;
};

enum class AlphaScheduleKind {
  practical_regret,  // sqrt((1 + log(1 + t)) / (1 + t))
  theory,            // sigma * sqrt(d log(1 + t) + 2 log(1 / delta')) + 1
  constant,
};

AlphaScheduleKind parse_alpha_schedule(std::string_view name);
std::string_view to_string(AlphaScheduleKind kind);

struct AlphaSchedule {
  AlphaScheduleKind kind = AlphaScheduleKind::practical_regret;
  double constant = 1.0;
  double sigma = 0.1;
  double delta_prime = 0.001;
  std::size_t dim = 1;

  double at(Round t) const;
};

/// Seeds (active or frozen) whose current member set contains `user`,
/// in ascending seed order.
std::vector<UserIndex> candidate_seeds(UserIndex user, std::span<const SeedClusterState> states);

struct ClusterEstimate {
  Vec theta;
  /// Mean of member reward confidence bounds at arm x.
  std::function<double(const Vec& x, double alpha)> bound;
};

/// Uniform average of member estimates and of member reward CBs.
/// Throws std::invalid_argument on an empty member set.
ClusterEstimate cluster_estimate(std::span<const UserIndex> members,
                                 std::span<const UserRidgeState> users);

/// Individual LinUCB index argmax. Lowest arm index wins ties.
PolicyDecision select_arm_linucb(const UserRidgeState& state, std::span<const Vec> arms,
                                 double alpha);

/// Overlapping-cluster arm selection: argmax over arms, then over candidate
/// seeds, of theta_N^T x + CB_N(x). Falls back to the individual index when
/// the user belongs to no seed's set. Ties go to the lowest arm index, then
/// the lowest seed id.
PolicyDecision select_arm_locb(UserIndex user, std::span<const Vec> arms,
                               std::span<const SeedClusterState> states,
                               std::span<const UserRidgeState> users, double alpha);

/// Reusable scratch for select_arm_locb; results are identical to the free
/// function, without per-round allocations.
class LocbScorer {
 public:
  PolicyDecision select(UserIndex user, std::span<const Vec> arms,
                        std::span<const SeedClusterState> states,
                        std::span<const UserRidgeState> users, double alpha);

 private:
  std::vector<double> cb_;          // user-major, per arm
  std::vector<char> cb_ready_;
  std::vector<UserIndex> touched_;
  std::vector<UserIndex> members_;
  Vec theta_sum_;
};

/// Bandit policy driven by the simulation loop: select, then update with the
/// realized reward of the chosen arm.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;
  virtual PolicyDecision select(UserIndex user, std::span<const Vec> arms, Round t) = 0;
  virtual void update(UserIndex user, const Vec& x, double reward, Round t) = 0;

  /// Seed clustering state for clustering policies, nullptr otherwise.
  virtual const SeedClustering* clustering() const { return nullptr; }
};

class LinUcbOne final : public Policy {
 public:
  LinUcbOne(std::size_t dim, AlphaSchedule alpha);
  std::string_view name() const override { return "linucb-one"; }
  PolicyDecision select(UserIndex user, std::span<const Vec> arms, Round t) override;
  void update(UserIndex user, const Vec& x, double reward, Round t) override;

 private:
  UserRidgeState shared_;
  AlphaSchedule alpha_;
};

class LinUcbInd final : public Policy {
 public:
  LinUcbInd(std::size_t n_users, std::size_t dim, AlphaSchedule alpha);
  std::string_view name() const override { return "linucb-ind"; }
  PolicyDecision select(UserIndex user, std::span<const Vec> arms, Round t) override;
  void update(UserIndex user, const Vec& x, double reward, Round t) override;

  std::span<const UserRidgeState> users() const { return users_; }

 private:
  std::vector<UserRidgeState> users_;
  AlphaSchedule alpha_;
};

/// Seed-based local clustering bandit. With TerminationRule::size_stable this
/// is the naive-termination variant (nlocb).
class Locb final : public Policy {
 public:
  Locb(std::size_t n_users, std::size_t dim, ClusteringConfig clustering, ConfidenceConfig confidence,
       AlphaSchedule alpha, TerminationRule rule = TerminationRule::confidence,
       bool keep_observation_log = false);

  std::string_view name() const override {
    return clustering_.rule() == TerminationRule::confidence ? "locb" : "nlocb";
  }
  PolicyDecision select(UserIndex user, std::span<const Vec> arms, Round t) override;
  void update(UserIndex user, const Vec& x, double reward, Round t) override;
  const SeedClustering* clustering() const override { return &clustering_; }

  std::span<const UserRidgeState> users() const { return users_; }

 private:
  std::vector<UserRidgeState> users_;
  SeedClustering clustering_;
  AlphaSchedule alpha_;
  LocbScorer scorer_;
};

}  // namespace locb
