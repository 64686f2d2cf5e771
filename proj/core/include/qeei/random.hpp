#pragma once

#include <cstddef>
#include <random>

#include "qeei/qmatrix.hpp"
#include "qeei/quaternion.hpp"

namespace qeei {

/// Components drawn uniformly from [-1, 1].
Quaternion random_quaternion(std::mt19937_64& rng);

/// rows x cols matrix of random_quaternion entries.
QMatrix random_qmatrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

/// Hermitian matrix with real diagonal in [-1, 1] and random_quaternion
/// entries above the diagonal.
HermitianQMatrix random_hermitian(std::size_t n, std::mt19937_64& rng);

}  // namespace qeei
