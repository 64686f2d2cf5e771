#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qeei/quaternion.hpp"
#include "qeei/real_matrix.hpp"

namespace qeei {

/// Dense row-major quaternion matrix with value semantics.
///
/// Element access is 0-based. Functions that take matrix positions as
/// arguments from the user-facing API (minor, natural_submatrix, the eigen
/// routines) use 1-based indices instead.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Quaternion>& data() const { return data_; }

  /// Real part (0), i part (1), j part (2) or k part (3) as a real matrix.
  RealMatrix component(int part) const;

  /// Maximum row sum of entry moduli.
  double inf_norm() const;
  /// Largest entry modulus.
  double max_modulus() const;
  /// Frobenius norm; for a column vector this is the Euclidean length.
  double frobenius_norm() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

/// A0 + A1 i + A2 j + A3 k; all four parts must share dimensions.
QMatrix from_components(const RealMatrix& a0, const RealMatrix& a1, const RealMatrix& a2,
                        const RealMatrix& a3);

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
/// Non-commutative product: (AB)_pq = sum_k a_pk b_kq in that order.
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, const QMatrix& a);

QMatrix matmul(const QMatrix& a, const QMatrix& b);
QMatrix conj_transpose(const QMatrix& a);
/// Every entry multiplied on the right: a_pq * q.
QMatrix scale_right(const QMatrix& a, const Quaternion& q);
/// Every entry multiplied on the left: q * a_pq.
QMatrix scale_left(const Quaternion& q, const QMatrix& a);

/// lambda E - A for square A.
QMatrix characteristic_matrix(const QMatrix& a, double lambda);

/// Largest entry modulus of A - B.
double max_entry_distance(const QMatrix& a, const QMatrix& b);

/// Real 4m x 4n representation
///   [ A0  A1  A2  A3]
///   [-A1  A0 -A3  A2]
///   [-A2  A3  A0 -A1]
///   [-A3 -A2  A1  A0]
/// which is additive and multiplicative.
RealMatrix real_lift(const QMatrix& a);

/// Square quaternion matrix known to satisfy A = A*.
///
/// Only validate_hermitian and the operations below construct one, so code
/// holding a HermitianQMatrix can rely on the invariant.
class HermitianQMatrix {
 public:
  const QMatrix& matrix() const { return inner_; }
  std::size_t size() const { return inner_.rows(); }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return inner_(r, c); }

 private:
  explicit HermitianQMatrix(QMatrix m) : inner_(std::move(m)) {}

  friend HermitianQMatrix validate_hermitian(const QMatrix& a);
  friend HermitianQMatrix minor(const HermitianQMatrix& a, std::size_t j);
  friend HermitianQMatrix shifted(const HermitianQMatrix& a, double lambda);

  QMatrix inner_;
};

/// Accepts A when a_pq = conj(a_qp) within 1e-12 * (1 + max |a_pq|).
/// Throws kNotSquare, or kNotHermitian naming the worst offending pair.
HermitianQMatrix validate_hermitian(const QMatrix& a);

/// A with row j and column j removed (1-based j, n >= 2).
HermitianQMatrix minor(const HermitianQMatrix& a, std::size_t j);

/// A - lambda E, still Hermitian for real lambda.
HermitianQMatrix shifted(const HermitianQMatrix& a, double lambda);

/// How natural_submatrix orders the rows and columns left after deleting
/// row i and column j.
enum class SubmatrixConvention {
  /// Row j and column i move to the front; everything else keeps its
  /// original order. This is the convention under which
  /// qadj(H) H = det(H) E holds for Hermitian H.
  kLeadingPair,
  /// Plain deletion, original order.
  kPlainDeletion,
  /// Row j takes the slot of the deleted column i so that row and column
  /// labels line up on the diagonal.
  kDiagonalAligned,
};

/// Delete row i and column j (1-based) and reorder per `convention`. For
/// i == j every convention reduces to plain deletion.
QMatrix natural_submatrix(const QMatrix& a, std::size_t i, std::size_t j,
                          SubmatrixConvention convention = SubmatrixConvention::kLeadingPair);

}  // namespace qeei
