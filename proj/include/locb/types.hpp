#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

namespace locb {

/// Dense column vector in the context space (arms, bandit parameters, b).
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Dense user index in [0, n). External ids (replay logs) are mapped onto these.
using UserIndex = std::size_t;

/// 1-based round counter.
using Round = std::uint64_t;

}  // namespace locb
