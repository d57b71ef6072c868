#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "locb/clustering.hpp"
#include "locb/environment.hpp"
#include "locb/estimator.hpp"
#include "locb/evaluation.hpp"
#include "locb/policy.hpp"

namespace locb {

/// Invalid configuration. key() names the offending field as a dotted path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct PolicySpec {
  std::string name;  // locb | nlocb | linucb-one | linucb-ind
  double gamma = 0.2;
  double tau = 1.0;
  std::optional<std::size_t> seeds;  // |S|; unset means every user is a seed
  AlphaScheduleKind alpha = AlphaScheduleKind::practical_regret;
  double alpha_constant = 1.0;
  RadiusMode radius = RadiusMode::practical_clustering;
  double delta = 0.1;
  double lambda_min = 0.5;
  bool require_termination = false;
  Round round_cap = 1'000'000;
  bool keep_observation_log = false;

  bool clusters() const { return name == "locb" || name == "nlocb"; }
};

enum class EnvironmentKind { synthetic, replay };

struct EnvironmentSpec {
  EnvironmentKind kind = EnvironmentKind::synthetic;
  SyntheticConfig synthetic;
  std::filesystem::path replay_path;
  std::optional<std::filesystem::path> truth_path;
  std::size_t arms = 10;
  double sigma = 0.1;  // used by the theory alpha schedule and radii
};

struct ExperimentConfig {
  std::string name = "experiment";
  EnvironmentSpec environment;
  std::vector<PolicySpec> policies;
  Round horizon = 1000;
  std::size_t runs = 1;
  std::uint64_t rng_seed = 1;
  std::filesystem::path output_dir = "out";
  Round checkpoint_interval = 0;
  std::size_t workers = 0;  // 0 = hardware concurrency
};

/// Parses and validates. Relative file paths resolve against base_dir.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical JSON of every field that affects results (output_dir and
/// workers excluded), with defaults filled in.
nlohmann::json canonical_json(const ExperimentConfig& cfg);
std::string config_hash(const ExperimentConfig& cfg);

/// Resolves the output directory, honoring the LOCB_OUTPUT_ROOT override.
std::filesystem::path effective_output_dir(const ExperimentConfig& cfg);

struct CheckpointRow {
  Round round = 0;
  AccuracyReport accuracy;
};

struct RunOutcome {
  std::string policy;
  std::size_t run_id = 0;
  std::vector<double> cum_regret;  // one entry per round up to the horizon
  std::vector<std::size_t> chosen_arms;
  std::vector<std::uint64_t> seeds;  // external ids
  std::map<UserIndex, std::vector<UserIndex>> clusters;
  std::optional<AccuracyReport> accuracy;
  std::vector<CheckpointRow> checkpoints;
  std::optional<Round> termination_round;
  bool aborted = false;
  Round rounds_simulated = 0;
  std::size_t skipped_users = 0;

  double final_regret() const { return cum_regret.empty() ? 0.0 : cum_regret.back(); }
};

/// Immutable inputs shared by every run of one experiment.
struct ExperimentInputs {
  std::optional<ReplayLog> log;
  std::optional<std::vector<std::vector<UserIndex>>> replay_truth;
};

ExperimentInputs load_inputs(const ExperimentConfig& cfg);

/// One seeded replica of one policy, entirely in memory.
RunOutcome simulate_run(const ExperimentConfig& cfg, const ExperimentInputs& inputs,
                        const PolicySpec& policy, std::size_t run_id);

/// Builds a policy by name; clustering policies draw |S| seeds from seed_rng.
std::unique_ptr<Policy> make_policy(const PolicySpec& spec, std::size_t n_users, std::size_t dim,
                                    double sigma, Rng& seed_rng, std::vector<UserIndex>* seeds_out = nullptr);

/// The synthetic world a run sees (world stream of that run).
SyntheticWorld world_for_run(const ExperimentConfig& cfg, std::size_t run_id);

struct PolicySummary {
  std::string policy;
  std::size_t runs = 0;
  std::size_t aborted_runs = 0;
  double mean_final_regret = 0.0;
  std::optional<AccuracyReport> mean_accuracy;
};

struct ExperimentResult {
  std::string config_hash;
  std::vector<RunOutcome> outcomes;  // policy-major, then run id
  std::vector<PolicySummary> summaries;
  bool any_aborted() const;
};

/// Runs every (policy, run) pair, in parallel across pairs, and writes the
/// artifacts under the output directory when write_files is set.
ExperimentResult run_experiment(const ExperimentConfig& cfg, bool write_files = true);

enum class SweepAxis { seed_count, gamma };
SweepAxis parse_sweep_axis(const std::string& name);

struct SweepRow {
  double value = 0.0;
  PolicySummary summary;
};

std::vector<SweepRow> sweep(const ExperimentConfig& cfg, SweepAxis axis, const std::vector<double>& values,
                            bool write_files = true);

/// Ground-truth clusters for a replay log, written in the cluster text format.
GroundTruth truth_from_log(const std::filesystem::path& log_path, std::size_t k, double gamma,
                           std::uint64_t rng_seed, const std::filesystem::path& out_path);

/// temp file + rename, so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace locb
