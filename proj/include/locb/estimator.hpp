#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "locb/linalg.hpp"
#include "locb/types.hpp"

namespace locb {

struct Observation {
  Vec x;
  double reward = 0.0;
};

/// Per-user ridge state: A = I + sum x x^T, b = sum r x, serve count m.
/// The estimate A^{-1} b is cached and refreshed on every observation.
class UserRidgeState {
 public:
  explicit UserRidgeState(std::size_t dim, bool keep_log = false);

  /// Folds one (context, reward) pair into the state. Rejects non-finite
  /// input and dimension mismatches with std::invalid_argument.
  void observe(const Vec& x, double reward);

  const Vec& theta_hat() const { return theta_; }
  const SpdAccumulator& accumulator() const { return acc_; }
  const Vec& response() const { return b_; }
  std::uint64_t serves() const { return serves_; }
  std::size_t dim() const { return acc_.dim(); }

  bool keeps_log() const { return keep_log_; }
  std::span<const Observation> log() const { return log_; }

 private:
  SpdAccumulator acc_;
  Vec b_;
  Vec theta_;
  std::uint64_t serves_ = 0;
  bool keep_log_;
  std::vector<Observation> log_;
};

inline void observe(UserRidgeState& state, const Vec& x, double reward) {
  state.observe(x, reward);
}
inline const Vec& theta_hat(const UserRidgeState& state) { return state.theta_hat(); }

enum class RadiusMode {
  theoretical,           // Lemma-style bound with the h(m, H) correction
  practical_clustering,  // faster-shrinking experimental form with n^{1/3}
  practical_regret,      // sqrt((1 + log(1 + m)) / (1 + m)), per-user serve count
};

RadiusMode parse_radius_mode(std::string_view name);
std::string_view to_string(RadiusMode mode);

struct ConfidenceConfig {
  double delta = 0.1;
  std::size_t n_users = 1;
  double sigma = 0.1;
  /// Minimal eigenvalue of E[X X^T]. Not observable from data; an assumption.
  double lambda_min = 0.5;
  std::size_t dim = 1;
  RadiusMode mode = RadiusMode::practical_clustering;

  double delta_prime() const;
  void validate() const;
};

double delta_prime(double delta, std::size_t n);

/// h(m, H) before clamping.
double radius_h(const ConfidenceConfig& cfg, std::uint64_t m);

double radius_theoretical(const ConfidenceConfig& cfg, std::uint64_t m, Round t);
double radius_practical_clustering(const ConfidenceConfig& cfg, std::uint64_t m, Round t);
double radius_practical_regret(Round t);

/// Confidence radius B(m, t) in the configured mode, factored as
/// numerator(t) * shrink(m). The factorization lets callers take the supremum
/// over many users with one numerator evaluation; max commutes with scaling
/// by a positive constant, so the result is bit-identical to radius().
class ConfidenceRadius {
 public:
  explicit ConfidenceRadius(ConfidenceConfig cfg);

  const ConfidenceConfig& config() const { return cfg_; }
  double numerator(Round t) const;
  double shrink(std::uint64_t m) const;
  double radius(std::uint64_t m, Round t) const { return numerator(t) * shrink(m); }

 private:
  ConfidenceConfig cfg_;
  double log_term_;   // 2 log(2 / delta')
  double log_h_;      // log(1 / H), H = delta' / (2 n d)
  double cube_root_n_;
};

/// alpha * sqrt(x^T A^{-1} x)
double reward_cb(const UserRidgeState& state, const Vec& x, double alpha);

}  // namespace locb
