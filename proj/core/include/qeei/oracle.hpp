#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qeei/eigen.hpp"
#include "qeei/qmatrix.hpp"

// Brute-force reference routines. Nothing here is used by the main eigen
// path; these exist to cross-check it.
namespace qeei::oracle {

/// Row-echelon form of M built only from row swaps and left
/// multiplications (row <- q * row, row_r <- row_r - q * row_p), which keep
/// the right null space {v : M v = 0} intact.
struct RowReduction {
  QMatrix reduced;  // reduced row echelon form R
  QMatrix undo;     // U with U * R = M
  std::vector<std::size_t> pivot_columns;  // 0-based
};

/// 1e-10 * (1 + ||M||_inf).
double default_pivot_tol(const QMatrix& m);

RowReduction row_reduce(const QMatrix& m, std::optional<double> pivot_tol = std::nullopt);

struct NullSpaceResult {
  std::vector<QMatrix> basis;  // orthonormal n x 1 columns
  std::size_t rank = 0;
  double pivot_tol = 0.0;
};

/// Right null space of a square M by Gaussian elimination with
/// max-modulus pivoting.
NullSpaceResult null_space(const QMatrix& m, std::optional<double> pivot_tol = std::nullopt);

/// |prod_{k != z} l_k(A) * det((B v)^* (B v)) - det(B^* A B)| where l_z is
/// the zero right eigenvalue of A and v its unit eigenvector. B is
/// n x (n-1). Throws kNoZeroEigenvalue when min |l_k| exceeds
/// 1e-8 * (1 + ||A||_inf), kDimensionMismatch for a badly shaped B.
double cauchy_binet_residual(const HermitianQMatrix& a, const QMatrix& b,
                             const EigenOptions& options = {});

/// Eigenpairs by solving (A - l E) v = 0 directly for each right
/// eigenvalue. Each vector is scaled so its largest-modulus component is
/// real and positive. Throws kDegenerateEigenvalue if an eigenvalue is not
/// simple or its null space is not one-dimensional.
std::vector<EigenPair> traditional_eigenpairs(const HermitianQMatrix& a,
                                              const EigenOptions& options = {});

/// Unit quaternion q minimizing ||v q - reference||_2.
Quaternion align_phase(const QMatrix& v, const QMatrix& reference);

/// max_j |(v q)_j - reference_j| after align_phase.
double aligned_max_deviation(const QMatrix& v, const QMatrix& reference);

}  // namespace qeei::oracle
