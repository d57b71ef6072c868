#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "locb/estimator.hpp"
#include "locb/types.hpp"

namespace locb {

/// A seed's neighbor set N_s. Membership is a dense flag array over the
/// user universe; members() lists users in ascending index order.
class SeedClusterState {
 public:
  SeedClusterState(UserIndex seed, std::size_t n_users);

  UserIndex seed() const { return seed_; }
  bool active() const { return active_; }
  std::optional<Round> terminated_round() const { return terminated_round_; }

  bool contains(UserIndex user) const { return flags_[user] != 0; }
  std::size_t size() const { return size_; }
  std::size_t universe() const { return flags_.size(); }
  std::vector<UserIndex> members() const;

  /// Returns true when membership changed. Frozen states reject mutation
  /// with std::logic_error; the seed itself can never be removed.
  bool insert(UserIndex user);
  bool erase(UserIndex user);

  /// Marks the set as returned. Throws std::logic_error when already frozen.
  void freeze(Round t);

 private:
  UserIndex seed_;
  std::vector<char> flags_;
  std::size_t size_;
  bool active_ = true;
  std::optional<Round> terminated_round_;
};

struct ClusteringConfig {
  double gamma = 0.2;
  double tau = 1.0;
  std::vector<UserIndex> seeds;
};

enum class TerminationRule {
  confidence,   // sup of member radii below gamma * tau / 8
  size_stable,  // member count unchanged over the last ceil(10 / delta) rounds
};

std::vector<SeedClusterState> init_clusters(std::size_t n_users, const ClusteringConfig& cfg);

/// Overlapping-interval test ||theta_i - theta_s|| <= B_i + B_s.
bool neighbor_test(const Vec& theta_i, const Vec& theta_s, double radius_i, double radius_s);

/// Strict supremum test over current members. Freezes the state when it fires.
bool check_termination(SeedClusterState& state, std::span<const UserRidgeState> users,
                       const ConfidenceRadius& radius, const ClusteringConfig& cfg, Round t);

/// Re-evaluates the served user against every active seed, then applies the
/// termination test to each of those seeds. Returns the number of seeds that
/// froze this round.
std::size_t update_memberships(UserIndex served, std::span<SeedClusterState> states,
                               std::span<const UserRidgeState> users,
                               const ConfidenceRadius& radius, const ClusteringConfig& cfg,
                               Round t);

bool all_terminated(std::span<const SeedClusterState> states);

/// seed -> members for every seed, frozen or not.
std::map<UserIndex, std::vector<UserIndex>> cluster_output(std::span<const SeedClusterState> states);

/// True iff the last ceil(10 / delta) recorded sizes are all equal.
bool nlocb_should_stop(std::span<const std::size_t> size_history, double delta);
std::size_t nlocb_window(double delta);

/// Owns the seed states for one simulation and applies the configured
/// termination rule. Per-user radius shrink factors are cached so that the
/// per-round supremum costs one pass over members without transcendental
/// calls.
class SeedClustering {
 public:
  SeedClustering(std::size_t n_users, ClusteringConfig cfg, ConfidenceRadius radius,
                 TerminationRule rule = TerminationRule::confidence);

  /// Clustering step after user `served` was updated in round t.
  void update(UserIndex served, std::span<const UserRidgeState> users, Round t);

  std::span<const SeedClusterState> states() const { return states_; }
  const ClusteringConfig& config() const { return cfg_; }
  const ConfidenceRadius& radius() const { return radius_; }
  TerminationRule rule() const { return rule_; }
  bool terminated() const { return active_count_ == 0; }
  std::size_t active_count() const { return active_count_; }

 private:
  double member_sup_shrink(const SeedClusterState& s) const;

  ClusteringConfig cfg_;
  ConfidenceRadius radius_;
  TerminationRule rule_;
  std::vector<SeedClusterState> states_;
  std::vector<double> shrink_;
  std::vector<std::deque<std::size_t>> size_history_;
  std::size_t active_count_;
};

/// Line-oriented cluster format: "seed: member,member,...".
/// `ids` maps dense indices to external ids; empty means identity.
void write_clusters(std::ostream& out, const std::map<UserIndex, std::vector<UserIndex>>& clusters,
                    std::span<const std::uint64_t> ids = {});
std::map<std::uint64_t, std::vector<std::uint64_t>> read_clusters(std::istream& in);

}  // namespace locb
