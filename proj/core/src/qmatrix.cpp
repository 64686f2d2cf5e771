#include "qeei/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeei/error.hpp"

namespace qeei {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::kDimensionMismatch, "ragged initializer list");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix QMatrix::component(int part) const {
  RealMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Quaternion& q = (*this)(r, c);
      switch (part) {
        case 0: out(r, c) = q.w; break;
        case 1: out(r, c) = q.x; break;
        case 2: out(r, c) = q.y; break;
        case 3: out(r, c) = q.z; break;
        default: throw Error(ErrorKind::kIndexOutOfRange, "component part must be 0..3");
      }
    }
  return out;
}

double QMatrix::inf_norm() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) sum += modulus((*this)(r, c));
    best = std::max(best, sum);
  }
  return best;
}

double QMatrix::max_modulus() const {
  double best = 0.0;
  for (const auto& q : data_) best = std::max(best, modulus(q));
  return best;
}

double QMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& q : data_) sum += norm_sq(q);
  return std::sqrt(sum);
}

QMatrix from_components(const RealMatrix& a0, const RealMatrix& a1, const RealMatrix& a2,
                        const RealMatrix& a3) {
  const std::size_t rows = a0.rows();
  const std::size_t cols = a0.cols();
  for (const RealMatrix* m : {&a1, &a2, &a3}) {
    if (m->rows() != rows || m->cols() != cols) {
      throw Error(ErrorKind::kDimensionMismatch, "component matrices differ in shape");
    }
  }
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = {a0(r, c), a1(r, c), a2(r, c), a3(r, c)};
  return out;
}

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, what);
  }
}

std::size_t checked_index(std::size_t one_based, std::size_t n, const char* what) {
  if (one_based < 1 || one_based > n) {
    std::ostringstream os;
    os << what << " index " << one_based << " outside 1.." << n;
    throw Error(ErrorKind::kIndexOutOfRange, os.str());
  }
  return one_based - 1;
}

}  // namespace

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  QMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  QMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix product");
  }
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Quaternion sum;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  return out;
}

QMatrix operator*(double s, const QMatrix& a) {
  QMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) { return a * b; }

QMatrix conj_transpose(const QMatrix& a) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = conj(a(r, c));
  return out;
}

QMatrix scale_right(const QMatrix& a, const Quaternion& q) {
  QMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) * q;
  return out;
}

QMatrix scale_left(const Quaternion& q, const QMatrix& a) {
  QMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = q * a(r, c);
  return out;
}

QMatrix characteristic_matrix(const QMatrix& a, double lambda) {
  if (!a.is_square()) throw Error(ErrorKind::kNotSquare, "characteristic matrix");
  QMatrix out = -1.0 * a;
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += lambda;
  return out;
}

double max_entry_distance(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "matrix distance");
  double best = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      best = std::max(best, modulus(a(r, c) - b(r, c)));
  return best;
}

RealMatrix real_lift(const QMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  RealMatrix out(4 * m, 4 * n);
  // Block (br, bc) holds sign * A_part.
  struct Block {
    int part;
    double sign;
  };
  static constexpr Block kPattern[4][4] = {
      {{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}},
      {{1, -1.0}, {0, 1.0}, {3, -1.0}, {2, 1.0}},
      {{2, -1.0}, {3, 1.0}, {0, 1.0}, {1, -1.0}},
      {{3, -1.0}, {2, -1.0}, {1, 1.0}, {0, 1.0}},
  };
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion& q = a(r, c);
      const double parts[4] = {q.w, q.x, q.y, q.z};
      for (std::size_t br = 0; br < 4; ++br)
        for (std::size_t bc = 0; bc < 4; ++bc) {
          const Block& b = kPattern[br][bc];
          out(br * m + r, bc * n + c) = b.sign * parts[b.part];
        }
    }
  return out;
}

HermitianQMatrix validate_hermitian(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::kNotSquare, "Hermitian matrix must be square");
  if (a.rows() == 0) throw Error(ErrorKind::kDimensionMismatch, "empty matrix");
  const double tol = 1e-12 * (1.0 + a.max_modulus());
  double worst = 0.0;
  std::size_t worst_p = 0;
  std::size_t worst_q = 0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p; q < a.cols(); ++q) {
      const double d = max_abs_diff(a(p, q), conj(a(q, p)));
      if (d > worst) {
        worst = d;
        worst_p = p;
        worst_q = q;
      }
    }
  if (worst > tol) {
    std::ostringstream os;
    os << "entry (" << worst_p + 1 << "," << worst_q + 1 << ") = " << to_string(a(worst_p, worst_q), 10)
       << " but conj of (" << worst_q + 1 << "," << worst_p + 1
       << ") = " << to_string(conj(a(worst_q, worst_p)), 10) << " (deviation " << worst
       << ", tolerance " << tol << ")";
    throw Error(ErrorKind::kNotHermitian, os.str());
  }
  return HermitianQMatrix(a);
}

HermitianQMatrix minor(const HermitianQMatrix& a, std::size_t j) {
  const std::size_t n = a.size();
  if (n < 2) throw Error(ErrorKind::kIndexOutOfRange, "minor of a 1x1 matrix");
  const std::size_t drop = checked_index(j, n, "minor");
  QMatrix out(n - 1, n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == drop) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == drop) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return HermitianQMatrix(std::move(out));
}

HermitianQMatrix shifted(const HermitianQMatrix& a, double lambda) {
  QMatrix out = a.matrix();
  for (std::size_t i = 0; i < a.size(); ++i) out(i, i) -= lambda;
  return HermitianQMatrix(std::move(out));
}

QMatrix natural_submatrix(const QMatrix& a, std::size_t i, std::size_t j,
                          SubmatrixConvention convention) {
  if (!a.is_square()) throw Error(ErrorKind::kNotSquare, "natural submatrix");
  const std::size_t n = a.rows();
  if (n < 2) throw Error(ErrorKind::kIndexOutOfRange, "natural submatrix of a 1x1 matrix");
  const std::size_t row_gone = checked_index(i, n, "row");
  const std::size_t col_gone = checked_index(j, n, "column");

  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  rows.reserve(n - 1);
  cols.reserve(n - 1);
  if (row_gone == col_gone || convention == SubmatrixConvention::kPlainDeletion) {
    for (std::size_t r = 0; r < n; ++r)
      if (r != row_gone) rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c)
      if (c != col_gone) cols.push_back(c);
  } else if (convention == SubmatrixConvention::kLeadingPair) {
    rows.push_back(col_gone);
    cols.push_back(row_gone);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == row_gone || k == col_gone) continue;
      rows.push_back(k);
      cols.push_back(k);
    }
  } else {
    for (std::size_t c = 0; c < n; ++c) {
      if (c == col_gone) continue;
      cols.push_back(c);
      rows.push_back(c == row_gone ? col_gone : c);
    }
  }

  QMatrix out(n - 1, n - 1);
  for (std::size_t r = 0; r < n - 1; ++r)
    for (std::size_t c = 0; c < n - 1; ++c) out(r, c) = a(rows[r], cols[c]);
  return out;
}

}  // namespace qeei
