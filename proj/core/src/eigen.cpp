#include "qeei/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qeei/error.hpp"
#include "qeei/qdet.hpp"

namespace qeei {

namespace {

constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_mass(const RealMatrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (p != q) sum += a(p, q) * a(p, q);
  return std::sqrt(sum);
}

// A <- J^T A J and V <- V J for the rotation annihilating a(p, q).
void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void require_index(std::size_t i, std::size_t n, const char* what) {
  if (i < 1 || i > n) {
    std::ostringstream os;
    os << what << " index " << i << " outside 1.." << n;
    throw Error(ErrorKind::kIndexOutOfRange, os.str());
  }
}

void require_simple(const Spectrum& spectrum, std::size_t i, const EigenOptions& options) {
  const double gap = spectrum.gap(i);
  const double tol = spectrum.simple_tol(options);
  if (gap <= tol) {
    std::ostringstream os;
    os << "lambda_" << i << " = " << spectrum.values[i - 1] << " is not simple: gap " << gap
       << " <= " << tol;
    throw Error(ErrorKind::kDegenerateEigenvalue, os.str());
  }
}

double residual_norm(const HermitianQMatrix& a, const QMatrix& v, double lambda) {
  return (a.matrix() * v - lambda * v).frobenius_norm();
}

}  // namespace

SymmetricEigen symmetric_eig(const RealMatrix& s) {
  if (!s.is_square()) throw Error(ErrorKind::kNotSymmetric, "matrix is not square");
  const std::size_t n = s.rows();
  double max_entry = 0.0;
  for (double x : s.data()) max_entry = std::max(max_entry, std::abs(x));
  const double sym_tol = 1e-10 * (1.0 + max_entry);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (std::abs(s(p, q) - s(q, p)) > sym_tol) {
        std::ostringstream os;
        os << "entries (" << p + 1 << "," << q + 1 << ") and (" << q + 1 << "," << p + 1
           << ") differ by " << std::abs(s(p, q) - s(q, p));
        throw Error(ErrorKind::kNotSymmetric, os.str());
      }

  RealMatrix a = s;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) a(p, q) = a(q, p) = 0.5 * (s(p, q) + s(q, p));
  RealMatrix v = RealMatrix::identity(n);
  const double target = 1e-12 * a.frobenius_norm();

  int sweeps = 0;
  while (off_diagonal_mass(a) > target) {
    if (sweeps == kMaxJacobiSweeps) {
      throw Error(ErrorKind::kNoConvergence, "Jacobi did not converge in 100 sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  SymmetricEigen out;
  out.sweeps = sweeps;
  out.values.reserve(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values.push_back(a(order[c], order[c]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

double Spectrum::simple_tol(const EigenOptions& options) const {
  const double range = values.empty() ? 0.0 : values.back() - values.front();
  return options.simple_scale * (1.0 + range);
}

double Spectrum::gap(std::size_t i) const {
  require_index(i, values.size(), "eigenvalue");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < values.size(); ++k)
    if (k != i - 1) best = std::min(best, std::abs(values[i - 1] - values[k]));
  return best;
}

double Spectrum::separation_product(std::size_t i) const {
  require_index(i, values.size(), "eigenvalue");
  double prod = 1.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (k != i - 1) prod *= values[i - 1] - values[k];
  return prod;
}

Spectrum right_eigenvalues(const HermitianQMatrix& a, const EigenOptions& options) {
  const RealMatrix lifted = real_lift(a.matrix());
  const SymmetricEigen eig = symmetric_eig(lifted);
  Spectrum out;
  out.source_dim = a.size();
  out.grouping_tol = options.grouping_scale * (1.0 + lifted.inf_norm());
  out.values.reserve(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) {
    const double* run = eig.values.data() + 4 * g;
    const double spread = run[3] - run[0];
    out.max_spread = std::max(out.max_spread, spread);
    if (spread > out.grouping_tol) {
      std::ostringstream os;
      os << "lift eigenvalues " << 4 * g + 1 << ".." << 4 * g + 4 << " spread " << spread
         << " exceeds grouping tolerance " << out.grouping_tol;
      throw Error(ErrorKind::kGroupingFailure, os.str());
    }
    out.values.push_back(0.25 * (run[0] + run[1] + run[2] + run[3]));
  }
  return out;
}

double eei_ratio(const HermitianQMatrix& a, const Spectrum& spectrum, std::size_t i, std::size_t j,
                 const EigenOptions& options) {
  const std::size_t n = a.size();
  require_index(i, n, "eigenvalue");
  require_index(j, n, "component");
  if (n == 1) return 1.0;
  require_simple(spectrum, i, options);
  const double lambda = spectrum.values[i - 1];
  const Spectrum minor_spectrum = right_eigenvalues(minor(a, j), options);
  double numerator = 1.0;
  for (double mu : minor_spectrum.values) numerator *= lambda - mu;
  return numerator / spectrum.separation_product(i);
}

double eei_modulus(const HermitianQMatrix& a, std::size_t i, std::size_t j,
                   const EigenOptions& options) {
  return eei_modulus(a, right_eigenvalues(a, options), i, j, options);
}

double eei_modulus(const HermitianQMatrix& a, const Spectrum& spectrum, std::size_t i,
                   std::size_t j, const EigenOptions& options) {
  const double raw = eei_ratio(a, spectrum, i, j, options);
  if (raw < -options.clamp_slack || raw > 1.0 + options.clamp_slack) {
    std::ostringstream os;
    os << "|v_" << i << j << "|^2 estimate " << raw << " outside [0, 1]";
    throw Error(ErrorKind::kIdentityViolation, os.str());
  }
  return std::clamp(raw, 0.0, 1.0);
}

EigenPair eigenvector_from_qadj(const HermitianQMatrix& a, std::size_t i,
                                const EigenOptions& options) {
  return eigenvector_from_qadj(a, right_eigenvalues(a, options), i, options);
}

EigenPair eigenvector_from_qadj(const HermitianQMatrix& a, const Spectrum& spectrum,
                                std::size_t i, const EigenOptions& options) {
  const std::size_t n = a.size();
  require_index(i, n, "eigenvalue");
  EigenPair out;
  out.index = i;
  out.lambda = spectrum.values[i - 1];
  out.vector = QMatrix(n, 1);
  if (n == 1) {
    out.vector(0, 0) = 1.0;
    out.pivot = 1;
    return out;
  }
  require_simple(spectrum, i, options);

  const QMatrix q = qadj(characteristic_matrix(a.matrix(), out.lambda));
  const double c = spectrum.separation_product(i);

  // Q_mm / c = |v_m|^2; c may be negative, so compare the ratio.
  std::size_t m = 0;
  if (options.pivot != 0) {
    require_index(options.pivot, n, "pivot");
    m = options.pivot - 1;
  } else {
    for (std::size_t k = 1; k < n; ++k)
      if (q(k, k).w / c > q(m, m).w / c) m = k;
  }
  const double pivot_sq = q(m, m).w / c;
  if (!(pivot_sq >= 1e-12)) {
    throw Error(ErrorKind::kPivotFailure, "no usable diagonal entry in qadj(lambda E - A)");
  }
  const double vm = std::sqrt(pivot_sq);
  for (std::size_t k = 0; k < n; ++k) {
    out.vector(k, 0) = (k == m) ? Quaternion(vm) : q(k, m) * inverse(Quaternion(vm)) / c;
  }
  out.pivot = m + 1;
  out.residual = residual_norm(a, out.vector, out.lambda);
  out.norm_dev = std::abs(out.vector.frobenius_norm() - 1.0);
  return out;
}

std::vector<EigenPair> eigenpairs_from_qadj(const HermitianQMatrix& a, const Spectrum& spectrum,
                                            const EigenOptions& options) {
  std::vector<EigenPair> pairs;
  pairs.reserve(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i)
    pairs.push_back(eigenvector_from_qadj(a, spectrum, i, options));
  return pairs;
}

std::vector<EeiReport> eei_report(const HermitianQMatrix& a, const EigenOptions& options) {
  const std::size_t n = a.size();
  const Spectrum spectrum = right_eigenvalues(a, options);
  const std::vector<EigenPair> pairs = eigenpairs_from_qadj(a, spectrum, options);
  std::vector<EeiReport> out;
  out.reserve(n * n);
  if (n == 1) {
    out.push_back({1, 1, norm_sq(pairs[0].vector(0, 0)), 1.0, 0.0});
    out.back().residual = std::abs(out.back().lhs - out.back().rhs);
    return out;
  }
  std::vector<Spectrum> minor_spectra;
  minor_spectra.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) minor_spectra.push_back(right_eigenvalues(minor(a, j), options));
  for (std::size_t i = 1; i <= n; ++i) {
    const double lambda = spectrum.values[i - 1];
    const double separation = spectrum.separation_product(i);
    for (std::size_t j = 1; j <= n; ++j) {
      EeiReport r;
      r.i = i;
      r.j = j;
      r.lhs = norm_sq(pairs[i - 1].vector(j - 1, 0)) * separation;
      r.rhs = 1.0;
      for (double mu : minor_spectra[j - 1].values) r.rhs *= lambda - mu;
      r.residual = std::abs(r.lhs - r.rhs);
      out.push_back(r);
    }
  }
  return out;
}

double verify_outer_product(const HermitianQMatrix& a, std::size_t i,
                            const EigenOptions& options) {
  const Spectrum spectrum = right_eigenvalues(a, options);
  return verify_outer_product(a, spectrum, eigenvector_from_qadj(a, spectrum, i, options));
}

double verify_outer_product(const HermitianQMatrix& a, const Spectrum& spectrum,
                            const EigenPair& pair) {
  const QMatrix q = qadj(characteristic_matrix(a.matrix(), pair.lambda));
  const double c = spectrum.separation_product(pair.index);
  return (q - c * (pair.vector * conj_transpose(pair.vector))).inf_norm();
}

double unitarity_residual(const std::vector<EigenPair>& pairs) {
  if (pairs.empty()) return 0.0;
  const std::size_t n = pairs.size();
  QMatrix v(pairs.front().vector.rows(), n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) = pairs[c].vector(r, 0);
  return (conj_transpose(v) * v - QMatrix::identity(n)).inf_norm();
}

}  // namespace qeei
