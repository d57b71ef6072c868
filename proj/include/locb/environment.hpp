#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locb/rng.hpp"
#include "locb/types.hpp"

namespace locb {

/// (x / (sqrt(2) ||x||), 1 / sqrt(2)): unit norm, and inner products of two
/// embedded vectors land in [0, 1]. Rejects the zero vector.
Vec embed_normalize(const Vec& raw);

struct SyntheticConfig {
  std::size_t n_users = 100;
  std::size_t n_clusters = 5;
  std::size_t size_min = 5;
  std::size_t size_max = 40;
  std::size_t d_raw = 5;
  double gamma_true = 0.2;
  double sigma = 0.1;
  std::size_t arms = 10;
  /// Radius of the uniform-ball perturbation around a unit raw center.
  /// Negative selects gamma_true / sqrt(2).
  double perturbation_radius = -1.0;
  /// Minimum embedded distance between cluster centers. Negative selects 3 * gamma_true.
  double min_center_separation = -1.0;
  std::size_t max_attempts = 100000;

  void validate() const;
  double effective_perturbation() const;
  double effective_separation() const;
};

struct SyntheticWorld {
  std::size_t d_raw = 0;
  std::vector<Vec> thetas;
  std::vector<std::size_t> cluster_of;
  std::vector<std::vector<UserIndex>> true_clusters;
  double sigma = 0.0;
  double gamma_true = 0.0;
  std::size_t arms = 0;

  std::size_t n_users() const { return thetas.size(); }
  std::size_t dim() const { return d_raw + 1; }
};

/// Builds a world whose true clusters all have embedded diameter below
/// gamma_true. Throws std::invalid_argument on infeasible size constraints and
/// std::runtime_error when rejection sampling exhausts max_attempts.
SyntheticWorld generate_synthetic(const SyntheticConfig& cfg, Rng& rng);

struct RoundDraw {
  UserIndex user = 0;
  std::vector<Vec> arms;
};

RoundDraw draw_round_synthetic(const SyntheticWorld& world, Rng& rng);

/// theta_user^T x + N(0, sigma^2). One normal draw is consumed even when sigma is 0.
double realize_reward(const SyntheticWorld& world, UserIndex user, const Vec& x, Rng& rng);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ReplayEvent {
  std::uint64_t user_id = 0;
  int reward = 0;
  Vec x;
};

/// Pre-featurized rating events. Users are mapped to dense indices in
/// ascending external-id order.
struct ReplayLog {
  std::size_t dim = 0;
  std::vector<ReplayEvent> events;
  std::vector<std::uint64_t> user_ids;
  std::vector<UserIndex> event_user;
  std::vector<std::vector<std::size_t>> positives;
  std::vector<std::vector<std::size_t>> negatives;

  std::size_t n_users() const { return user_ids.size(); }
  std::size_t positive_count() const;

  /// Rebuilds the dense user map and per-user positive/negative indices.
  void build_index();
};

/// Text schema: first line "d=<int>", then "user_id,reward,f_1,...,f_d" per
/// event. An optional "[theta]" section (world files) is skipped.
ReplayLog parse_replay_log(std::istream& in);
ReplayLog load_replay_log(const std::filesystem::path& path);
void write_replay_log(std::ostream& out, const ReplayLog& log);

struct ReplayDraw {
  UserIndex user = 0;
  std::vector<Vec> arms;
  std::vector<int> rewards;
  std::vector<std::size_t> event_index;
  std::size_t skipped = 0;
};

/// One positive and k - 1 negative events of a uniformly drawn user, shuffled.
/// Users without enough events are skipped and counted.
ReplayDraw draw_round_replay(const ReplayLog& log, Rng& rng, std::size_t k);

/// Binary-reward log from a synthetic world: reward ~ Bernoulli(theta^T x)
/// for uniformly drawn embedded contexts.
ReplayLog sample_replay_log(const SyntheticWorld& world, std::size_t events_per_user, Rng& rng);

/// World file: replay header, no events, then "[theta]" and one
/// "user_id,cluster_id,f_1,...,f_d" line per user.
void write_world(std::ostream& out, const SyntheticWorld& world);
SyntheticWorld read_world(std::istream& in);

}  // namespace locb
