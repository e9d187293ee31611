#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "orbitsep/rng.hpp"

namespace orbitsep {

/// Haar-like random element of O(d): QR of a standard Gaussian matrix with
/// the sign convention that the triangular factor has positive diagonal.
/// Deterministic given the seed.
Eigen::MatrixXd random_orthogonal(int d, std::uint64_t seed);

Eigen::MatrixXd random_orthogonal(int d, Rng& rng);

}  // namespace orbitsep
