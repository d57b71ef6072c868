#pragma once

#include <cstdint>

#include "locb/types.hpp"

namespace locb {

/// Plain left-to-right dot product. Summation order is fixed so that every
/// caller (policies, oracles) reproduces the same bits.
double dot(const Vec& a, const Vec& b);

/// Euclidean distance ||a - b||.
double distance(const Vec& a, const Vec& b);

bool all_finite(const Vec& v);

/// Ridge design accumulator A = I + sum x x^T together with its inverse.
///
/// The inverse is maintained with the Sherman-Morrison identity, O(d^2) per
/// update. Every kRefreshInterval updates the inverse is recomputed from A
/// by a Cholesky solve to bound floating-point drift.
class SpdAccumulator {
 public:
  static constexpr std::uint64_t kRefreshInterval = 1000;
  static constexpr std::size_t kMaxDim = 64;

  /// Identity accumulator of dimension d. Throws std::invalid_argument on d == 0.
  explicit SpdAccumulator(std::size_t d);

  std::size_t dim() const { return static_cast<std::size_t>(a_.rows()); }
  const Mat& matrix() const { return a_; }
  const Mat& inverse() const { return a_inv_; }
  std::uint64_t update_count() const { return updates_; }

  /// A <- A + x x^T, inverse updated in place.
  void rank_one_update(const Vec& x);

  /// x^T A^{-1} x.
  double quad_form(const Vec& x) const;

  /// max |(A A^{-1} - I)_{ij}|
  double inverse_residual() const;

 private:
  void refresh_inverse();

  Mat a_;
  Mat a_inv_;
  Vec scratch_;
  std::uint64_t updates_ = 0;
};

SpdAccumulator spd_init(std::size_t d);
SpdAccumulator spd_rank_one_update(SpdAccumulator acc, const Vec& x);
double quad_form(const SpdAccumulator& acc, const Vec& x);

}  // namespace locb
