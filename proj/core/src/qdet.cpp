#include "qeei/qdet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qeei/error.hpp"

namespace qeei {

namespace {

// Visits cycles starting from the first unvisited element in `starts` order.
template <typename Range>
CycleDecomposition decompose(std::span<const std::size_t> permutation, Range starts) {
  const std::size_t n = permutation.size();
  std::vector<bool> seen(n, false);
  CycleDecomposition out;
  for (std::size_t s : starts) {
    if (seen[s]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = s; !seen[x]; x = permutation[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  out.sign = ((n - out.cycles.size()) % 2 == 0) ? 1 : -1;
  return out;
}

std::vector<std::size_t> ascending(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

void check_expansion_input(const QMatrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorKind::kNotSquare, what);
  if (a.rows() > kMaxExpansionOrder) {
    std::ostringstream os;
    os << what << " of order " << a.rows() << " exceeds the limit " << kMaxExpansionOrder;
    throw Error(ErrorKind::kComplexityLimit, os.str());
  }
}

Quaternion expand(const QMatrix& a, ExpansionOrder order) {
  Quaternion sum;
  for_each_term(a.rows(), order,
                [&](int sign, std::span<const std::pair<std::size_t, std::size_t>> factors) {
                  Quaternion term = 1.0;
                  for (const auto& [r, c] : factors) term = term * a(r, c);
                  if (sign > 0) {
                    sum += term;
                  } else {
                    sum -= term;
                  }
                });
  return sum;
}

}  // namespace

CycleDecomposition det_normal_form(std::span<const std::size_t> permutation) {
  auto starts = ascending(permutation.size());
  std::reverse(starts.begin(), starts.end());
  return decompose(permutation, starts);
}

CycleDecomposition row_expansion_form(std::span<const std::size_t> permutation) {
  return decompose(permutation, ascending(permutation.size()));
}

void for_each_term(
    std::size_t n, ExpansionOrder order,
    const std::function<void(int, std::span<const std::pair<std::size_t, std::size_t>>)>& visit) {
  if (n == 0) {
    visit(1, {});
    return;
  }
  std::vector<std::size_t> perm = ascending(n);
  std::vector<std::pair<std::size_t, std::size_t>> factors(n);
  do {
    const CycleDecomposition cd = order == ExpansionOrder::kDeterminant
                                      ? det_normal_form(perm)
                                      : row_expansion_form(perm);
    std::size_t f = 0;
    for (const auto& cycle : cd.cycles)
      for (std::size_t r : cycle) factors[f++] = {r, perm[r]};
    visit(cd.sign, factors);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<ExpansionTerm> expansion_terms(std::size_t n, ExpansionOrder order) {
  std::vector<ExpansionTerm> terms;
  for_each_term(n, order, [&](int sign, std::span<const std::pair<std::size_t, std::size_t>> f) {
    terms.push_back({sign, {f.begin(), f.end()}});
  });
  return terms;
}

Quaternion det(const QMatrix& a) {
  check_expansion_input(a, "det");
  return expand(a, ExpansionOrder::kDeterminant);
}

Quaternion row_expansion(const QMatrix& a) {
  check_expansion_input(a, "row expansion");
  return expand(a, ExpansionOrder::kRowExpansion);
}

QMatrix qadj(const QMatrix& a, SubmatrixConvention convention) {
  check_expansion_input(a, "qadj");
  const std::size_t n = a.rows();
  QMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = 1.0;
    return out;
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Quaternion cofactor = row_expansion(natural_submatrix(a, q + 1, p + 1, convention));
      out(p, q) = (p == q) ? cofactor : -cofactor;
    }
  return out;
}

double det_invariance_check(const HermitianQMatrix& h, std::size_t k, std::size_t j,
                            const Quaternion& lambda) {
  const std::size_t n = h.size();
  if (k < 1 || k > n || j < 1 || j > n || j == k) {
    throw Error(ErrorKind::kIndexOutOfRange, "det_invariance_check needs distinct k, j in 1..n");
  }
  QMatrix p = QMatrix::identity(n);
  p(j - 1, k - 1) = lambda;
  const QMatrix transformed = conj_transpose(p) * h.matrix() * p;
  return modulus(det(transformed) - det(h.matrix()));
}

}  // namespace qeei
