#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qeei/qmatrix.hpp"
#include "qeei/quaternion.hpp"

namespace qeei {

/// Largest order accepted by the permutation-sum routines (n! terms).
inline constexpr std::size_t kMaxExpansionOrder = 8;

/// Disjoint cycles of a permutation, each written so that walking the cycle
/// gives the factor order a_{c0 s(c0)} a_{c1 s(c1)} ... with c_{t+1} = s(c_t).
/// Indices are 0-based.
struct CycleDecomposition {
  std::vector<std::vector<std::size_t>> cycles;
  int sign = 1;  // (-1)^(n - number of cycles)
};

/// Normal form used by the permutation determinant: every cycle starts at
/// its largest element and cycles are listed by descending leader.
CycleDecomposition det_normal_form(std::span<const std::size_t> permutation);

/// Chain form used by the row expansion: the first cycle starts at row 0 and
/// each later cycle restarts at the smallest row not yet used.
CycleDecomposition row_expansion_form(std::span<const std::size_t> permutation);

enum class ExpansionOrder {
  kDeterminant,   // det_normal_form
  kRowExpansion,  // row_expansion_form
};

/// One signed product of the expansion; factors are (row, col), 0-based, in
/// multiplication order.
struct ExpansionTerm {
  int sign = 1;
  std::vector<std::pair<std::size_t, std::size_t>> factors;
};

/// Calls `visit` once per permutation of {0..n-1}, in lexicographic order of
/// the permutation's image vector. The span passed to `visit` is only valid
/// for the duration of the call.
void for_each_term(
    std::size_t n, ExpansionOrder order,
    const std::function<void(int sign, std::span<const std::pair<std::size_t, std::size_t>>)>&
        visit);

/// All n! terms, materialized. Intended for inspection and tests.
std::vector<ExpansionTerm> expansion_terms(std::size_t n, ExpansionOrder order);

/// Permutation determinant: sum over S_n of sign * ordered product in
/// det_normal_form. Real for Hermitian input. The 0x0 determinant is 1.
/// Throws kNotSquare, kComplexityLimit (n > 8).
Quaternion det(const QMatrix& a);

/// Row expansion |A|^row: like det, but factor order follows the chain from
/// row 1 (row_expansion_form).
Quaternion row_expansion(const QMatrix& a);

/// Quaternion adjugate: diagonal entries |A_pp|^row, off-diagonal (p,q)
/// entries -|A_qp|^row with A_qp = natural_submatrix(A, q, p, convention).
/// With the default convention, qadj(H) H = H qadj(H) = det(H) E for
/// Hermitian H. qadj of a 1x1 matrix is [1].
QMatrix qadj(const QMatrix& a, SubmatrixConvention convention = SubmatrixConvention::kLeadingPair);

/// |det(P* H P) - det(H)| where P = E with lambda placed at (j, k), i.e.
/// lambda times column j added to column k (1-based, j != k).
double det_invariance_check(const HermitianQMatrix& h, std::size_t k, std::size_t j,
                            const Quaternion& lambda);

}  // namespace qeei
