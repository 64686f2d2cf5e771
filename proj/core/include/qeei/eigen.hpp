#pragma once

#include <cstddef>
#include <vector>

#include "qeei/qmatrix.hpp"
#include "qeei/real_matrix.hpp"

namespace qeei {

/// Ascending eigenvalues of a real symmetric matrix with orthonormal
/// eigenvectors as the columns of `vectors`.
struct SymmetricEigen {
  std::vector<double> values;
  RealMatrix vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi. Iterates until the off-diagonal Frobenius mass drops below
/// 1e-12 * ||S||_F. Throws kNotSymmetric (asymmetry above
/// 1e-10 * (1 + max |s_ij|)) or kNoConvergence after 100 sweeps.
SymmetricEigen symmetric_eig(const RealMatrix& s);

/// Scale factors for the tolerances derived from a matrix.
struct EigenOptions {
  /// grouping_tol = grouping_scale * (1 + ||lift(A)||_inf)
  double grouping_scale = 1e-7;
  /// simple_tol = simple_scale * (1 + (lambda_max - lambda_min))
  double simple_scale = 1e-6;
  /// |v_ij|^2 estimates below -clamp_slack are identity violations;
  /// anything in [-clamp_slack, 0) is rounding and clamps to 0.
  double clamp_slack = 1e-9;
  /// Component (1-based) made real in eigenvector_from_qadj; 0 picks the
  /// one with the largest |v_m|^2.
  std::size_t pivot = 0;
};

/// Right eigenvalues of a Hermitian quaternion matrix, ascending.
struct Spectrum {
  std::vector<double> values;
  double grouping_tol = 0.0;
  std::size_t source_dim = 0;
  /// Largest max-min spread seen within one quadruple of lift eigenvalues.
  double max_spread = 0.0;

  double simple_tol(const EigenOptions& options = {}) const;
  /// Distance from values[i-1] to the nearest other value (1-based i);
  /// infinite for a 1x1 spectrum.
  double gap(std::size_t i) const;
  /// prod_{k != i} (lambda_i - lambda_k), 1-based i.
  double separation_product(std::size_t i) const;
};

/// Eigenvalues of lift(A) taken in sorted runs of four; each run's mean is a
/// right eigenvalue. Throws kGroupingFailure when a run spreads further than
/// the grouping tolerance.
Spectrum right_eigenvalues(const HermitianQMatrix& a, const EigenOptions& options = {});

struct EigenPair {
  std::size_t index = 0;  // 1-based position in the spectrum
  double lambda = 0.0;
  QMatrix vector;         // n x 1
  std::size_t pivot = 0;  // 1-based m with vector[m] real and >= 0
  double residual = 0.0;  // ||A v - v lambda||_2
  double norm_dev = 0.0;  // | ||v||_2 - 1 |
};

/// Both sides of |v_ij|^2 prod_{k!=i}(l_i(A) - l_k(A)) = prod_k (l_i(A) - l_k(M_j)).
struct EeiReport {
  std::size_t i = 0;  // 1-based eigenvalue index
  std::size_t j = 0;  // 1-based component index
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// Unclamped |v_ij|^2 from the minor spectrum: prod_k (l_i - l_k(M_j)) /
/// prod_{k!=i} (l_i - l_k). Throws kDegenerateEigenvalue when l_i is not
/// simple.
double eei_ratio(const HermitianQMatrix& a, const Spectrum& spectrum, std::size_t i, std::size_t j,
                 const EigenOptions& options = {});

/// |v_ij|^2 via the eigenvector-eigenvalue identity, clamped to [0, 1].
/// Throws kIdentityViolation if the raw ratio leaves [-slack, 1 + slack].
double eei_modulus(const HermitianQMatrix& a, std::size_t i, std::size_t j,
                   const EigenOptions& options = {});
double eei_modulus(const HermitianQMatrix& a, const Spectrum& spectrum, std::size_t i,
                   std::size_t j, const EigenOptions& options = {});

/// Unit eigenvector for the simple eigenvalue l_i read off
/// qadj(l_i E - A) = c v v*, c = prod_{k!=i}(l_i - l_k). The pivot m
/// maximizes |v_m|^2 = Q_mm / c; v_m is real and non-negative and the other
/// components are v_j = Q_jm v_m^{-1} / c. options.pivot forces m.
/// Throws kDegenerateEigenvalue or kPivotFailure.
EigenPair eigenvector_from_qadj(const HermitianQMatrix& a, std::size_t i,
                                const EigenOptions& options = {});
EigenPair eigenvector_from_qadj(const HermitianQMatrix& a, const Spectrum& spectrum,
                                std::size_t i, const EigenOptions& options = {});

/// eigenvector_from_qadj for every i.
std::vector<EigenPair> eigenpairs_from_qadj(const HermitianQMatrix& a, const Spectrum& spectrum,
                                            const EigenOptions& options = {});

/// lhs from the reconstructed eigenvectors, rhs from the minor spectra, for
/// every (i, j). A 1x1 input yields one report with lhs = rhs = 1.
std::vector<EeiReport> eei_report(const HermitianQMatrix& a, const EigenOptions& options = {});

/// ||qadj(l_i E - A) - c v v*||_inf.
double verify_outer_product(const HermitianQMatrix& a, std::size_t i,
                            const EigenOptions& options = {});
double verify_outer_product(const HermitianQMatrix& a, const Spectrum& spectrum,
                            const EigenPair& pair);

/// ||V* V - E||_inf with the eigenvectors as the columns of V.
double unitarity_residual(const std::vector<EigenPair>& pairs);

}  // namespace qeei
