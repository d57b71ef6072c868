#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace locb {

/// Well-known stream tags used to derive independent generators per run.
enum class Stream : std::uint64_t {
  world = 1,
  rounds = 2,
  noise = 3,
  seeds = 4,
  truth = 5,
  policy = 6,
};

/// SplitMix64 finalizer; used to derive seeds, never as the sampling engine.
std::uint64_t splitmix64(std::uint64_t x);

/// mt19937_64 engine with distribution code written out explicitly, so the
/// same master seed yields the same draws under any standard library.
class Rng {
 public:
  static constexpr std::string_view kFamily =
      "mt19937_64 seeded by splitmix64(master, run, stream)";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent generator for (run, stream) under a master seed.
  static Rng derive(std::uint64_t master, std::uint64_t run, Stream stream);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Standard normal via the Marsaglia polar method.
  double normal();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    shuffle(std::span<T>(items));
  }

  /// k distinct indices from [0, n), in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace locb
