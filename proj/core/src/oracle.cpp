#include "qeei/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qeei/error.hpp"
#include "qeei/qdet.hpp"

namespace qeei::oracle {

namespace {

void swap_rows(QMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(QMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Euclidean inner product u* w of two columns.
Quaternion inner(const QMatrix& u, const QMatrix& w) {
  Quaternion s;
  for (std::size_t r = 0; r < u.rows(); ++r) s += conj(u(r, 0)) * w(r, 0);
  return s;
}

// Right-multiplies v so its largest-modulus component is real and positive.
QMatrix fix_phase(const QMatrix& v, std::size_t* pivot) {
  std::size_t m = 0;
  for (std::size_t r = 1; r < v.rows(); ++r)
    if (modulus(v(r, 0)) > modulus(v(m, 0))) m = r;
  if (pivot) *pivot = m + 1;
  const double len = modulus(v(m, 0));
  if (len == 0.0) return v;
  return scale_right(v, conj(v(m, 0)) / len);
}

}  // namespace

double default_pivot_tol(const QMatrix& m) { return 1e-10 * (1.0 + m.inf_norm()); }

RowReduction row_reduce(const QMatrix& m, std::optional<double> pivot_tol) {
  const double tol = pivot_tol.value_or(default_pivot_tol(m));
  RowReduction out{m, QMatrix::identity(m.rows()), {}};
  QMatrix& r = out.reduced;
  QMatrix& u = out.undo;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t best = row;
    for (std::size_t k = row + 1; k < r.rows(); ++k)
      if (modulus(r(k, col)) > modulus(r(best, col))) best = k;
    if (modulus(r(best, col)) <= tol) {
      for (std::size_t k = row; k < r.rows(); ++k) r(k, col) = 0.0;
      continue;
    }
    if (best != row) {
      swap_rows(r, best, row);
      swap_cols(u, best, row);
    }
    // row <- p^{-1} row; undo gets column `row` multiplied on the right by p.
    const Quaternion p = r(row, col);
    const Quaternion p_inv = inverse(p);
    for (std::size_t c = 0; c < r.cols(); ++c) r(row, c) = p_inv * r(row, c);
    for (std::size_t k = 0; k < u.rows(); ++k) u(k, row) = u(k, row) * p;
    r(row, col) = 1.0;
    // row_k <- row_k - f row; undo gets column `row` += column k * f.
    for (std::size_t k = 0; k < r.rows(); ++k) {
      if (k == row) continue;
      const Quaternion f = r(k, col);
      if (f == Quaternion{}) continue;
      for (std::size_t c = 0; c < r.cols(); ++c) r(k, c) -= f * r(row, c);
      for (std::size_t t = 0; t < u.rows(); ++t) u(t, row) += u(t, k) * f;
      r(k, col) = 0.0;
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

NullSpaceResult null_space(const QMatrix& m, std::optional<double> pivot_tol) {
  if (!m.is_square()) throw Error(ErrorKind::kNotSquare, "null_space");
  const std::size_t n = m.cols();
  NullSpaceResult out;
  out.pivot_tol = pivot_tol.value_or(default_pivot_tol(m));
  const RowReduction rr = row_reduce(m, out.pivot_tol);
  out.rank = rr.pivot_columns.size();

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QMatrix v(n, 1);
    v(free, 0) = 1.0;
    for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k)
      v(rr.pivot_columns[k], 0) = -rr.reduced(k, free);
    for (const QMatrix& b : out.basis) v = v - scale_right(b, inner(b, v));
    const double len = v.frobenius_norm();
    out.basis.push_back((1.0 / len) * v);
  }
  return out;
}

double cauchy_binet_residual(const HermitianQMatrix& a, const QMatrix& b,
                             const EigenOptions& options) {
  const std::size_t n = a.size();
  if (n < 2 || b.rows() != n || b.cols() != n - 1) {
    throw Error(ErrorKind::kDimensionMismatch, "B must be n x (n-1) with n >= 2");
  }
  const Spectrum spectrum = right_eigenvalues(a, options);
  std::size_t zero = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (std::abs(spectrum.values[k]) < std::abs(spectrum.values[zero])) zero = k;
  const double zero_tol = 1e-8 * (1.0 + a.matrix().inf_norm());
  if (std::abs(spectrum.values[zero]) > zero_tol) {
    std::ostringstream os;
    os << "smallest |eigenvalue| is " << std::abs(spectrum.values[zero]);
    throw Error(ErrorKind::kNoZeroEigenvalue, os.str());
  }
  const NullSpaceResult ns = null_space(a.matrix());
  if (ns.basis.empty()) throw Error(ErrorKind::kNoZeroEigenvalue, "A has a trivial null space");
  const QMatrix& v = ns.basis.front();

  double others = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    if (k != zero) others *= spectrum.values[k];

  QMatrix bv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c + 1 < n; ++c) bv(r, c) = b(r, c);
    bv(r, n - 1) = v(r, 0);
  }
  const Quaternion lhs = others * det(conj_transpose(bv) * bv);
  const Quaternion rhs = det(conj_transpose(b) * a.matrix() * b);
  return modulus(lhs - rhs);
}

std::vector<EigenPair> traditional_eigenpairs(const HermitianQMatrix& a,
                                              const EigenOptions& options) {
  const Spectrum spectrum = right_eigenvalues(a, options);
  const std::size_t n = a.size();
  std::vector<EigenPair> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double lambda = spectrum.values[i - 1];
    if (n > 1 && spectrum.gap(i) <= spectrum.simple_tol(options)) {
      throw Error(ErrorKind::kDegenerateEigenvalue, "repeated eigenvalue");
    }
    const NullSpaceResult ns = null_space(characteristic_matrix(a.matrix(), lambda));
    if (ns.basis.size() != 1) {
      std::ostringstream os;
      os << "null space of lambda_" << i << " E - A has dimension " << ns.basis.size();
      throw Error(ErrorKind::kDegenerateEigenvalue, os.str());
    }
    EigenPair pair;
    pair.index = i;
    pair.lambda = lambda;
    std::size_t pivot = 0;
    pair.vector = fix_phase(ns.basis.front(), &pivot);
    pair.pivot = pivot;
    pair.residual = (a.matrix() * pair.vector - lambda * pair.vector).frobenius_norm();
    pair.norm_dev = std::abs(pair.vector.frobenius_norm() - 1.0);
    out.push_back(std::move(pair));
  }
  return out;
}

Quaternion align_phase(const QMatrix& v, const QMatrix& reference) {
  const Quaternion s = inner(reference, v);
  const double len = modulus(s);
  if (len == 0.0) return 1.0;
  return conj(s) / len;
}

double aligned_max_deviation(const QMatrix& v, const QMatrix& reference) {
  return max_entry_distance(scale_right(v, align_phase(v, reference)), reference);
}

}  // namespace qeei::oracle
