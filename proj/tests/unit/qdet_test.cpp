#include "qeei/qdet.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qeei/eigen.hpp"
#include "qeei/error.hpp"
#include "qeei/random.hpp"

namespace qeei {
namespace {

using testing::classical_adjugate;
using testing::classical_det;
using testing::diagonal;
using testing::example_matrix;
using testing::near;

using Factors = std::vector<std::pair<std::size_t, std::size_t>>;

// 1-based "a_rc" labels -> 0-based factor list.
Factors factors(std::initializer_list<int> labels) {
  Factors out;
  for (int l : labels) out.emplace_back(l / 10 - 1, l % 10 - 1);
  return out;
}

double adjugate_residual(const QMatrix& h, SubmatrixConvention convention) {
  const QMatrix adj = qadj(h, convention);
  const QMatrix scaled_identity = scale_right(QMatrix::identity(h.rows()), det(h));
  return std::max((adj * h - scaled_identity).inf_norm(), (h * adj - scaled_identity).inf_norm());
}

RealMatrix random_real(std::size_t n, std::mt19937_64& rng, bool symmetric) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  if (symmetric)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c) m(r, c) = m(c, r);
  return m;
}

QMatrix embed(const RealMatrix& m) {
  const RealMatrix zero(m.rows(), m.cols());
  return from_components(m, zero, zero, zero);
}

TEST(CycleFormTest, NormalFormsOfAThreeCycle) {
  // 1 -> 2 -> 3 -> 1 in 0-based form.
  const std::vector<std::size_t> perm{1, 2, 0};
  const CycleDecomposition d = det_normal_form(perm);
  ASSERT_EQ(d.cycles.size(), 1u);
  EXPECT_EQ(d.cycles[0], (std::vector<std::size_t>{2, 0, 1}));  // a31 a12 a23
  EXPECT_EQ(d.sign, 1);
  const CycleDecomposition r = row_expansion_form(perm);
  EXPECT_EQ(r.cycles[0], (std::vector<std::size_t>{0, 1, 2}));  // a12 a23 a31
}

TEST(CycleFormTest, LeadersAndOrdering) {
  // (1 3)(2)(4 5) 0-based: 0<->2, 1 fixed, 3<->4
  const std::vector<std::size_t> perm{2, 1, 0, 4, 3};
  const CycleDecomposition d = det_normal_form(perm);
  EXPECT_EQ(d.cycles, (std::vector<std::vector<std::size_t>>{{4, 3}, {2, 0}, {1}}));
  const CycleDecomposition r = row_expansion_form(perm);
  EXPECT_EQ(r.cycles, (std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3, 4}}));
  EXPECT_EQ(d.sign, 1);  // (-1)^(5-3)
  EXPECT_EQ(r.sign, 1);
}

TEST(ExpansionTermsTest, CountAndCoverage) {
  std::size_t factorial = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    factorial *= n;
    for (auto order : {ExpansionOrder::kDeterminant, ExpansionOrder::kRowExpansion}) {
      const auto terms = expansion_terms(n, order);
      EXPECT_EQ(terms.size(), factorial);
      std::set<Factors> distinct;
      for (const auto& t : terms) {
        std::set<std::size_t> rows;
        std::set<std::size_t> cols;
        for (const auto& [r, c] : t.factors) {
          rows.insert(r);
          cols.insert(c);
        }
        EXPECT_EQ(rows.size(), n);
        EXPECT_EQ(cols.size(), n);
        Factors sorted = t.factors;
        std::sort(sorted.begin(), sorted.end());
        distinct.insert(sorted);
      }
      EXPECT_EQ(distinct.size(), factorial);
    }
  }
}

TEST(ExpansionTermsTest, RowExpansionOrdersForFourByFour) {
  const auto terms = expansion_terms(4, ExpansionOrder::kRowExpansion);
  auto find = [&](const Factors& f) -> const ExpansionTerm* {
    for (const auto& t : terms)
      if (t.factors == f) return &t;
    return nullptr;
  };
  const std::pair<Factors, int> expected[] = {
      {factors({11, 22, 33, 44}), 1}, {factors({11, 23, 34, 42}), 1},
      {factors({11, 24, 43, 32}), 1}, {factors({11, 24, 42, 33}), -1},
      {factors({12, 21, 34, 43}), 1}, {factors({14, 41, 23, 32}), 1},
  };
  for (const auto& [f, sign] : expected) {
    const ExpansionTerm* t = find(f);
    ASSERT_NE(t, nullptr);
    EXPECT_EQ(t->sign, sign);
  }
}

TEST(DetTest, ExampleMatrix) {
  EXPECT_TRUE(near(det(example_matrix()), Quaternion{3.0}));
  EXPECT_TRUE(near(row_expansion(example_matrix()), Quaternion{3.0}));
}

TEST(DetTest, Diagonal) {
  EXPECT_TRUE(near(det(diagonal({2.0, -3.0, 0.5, 4.0})), Quaternion{-12.0}, 1e-14));
}

TEST(DetTest, SmallCases) {
  const Quaternion q{0.5, -1.0, 2.0, 3.0};
  EXPECT_EQ(row_expansion(QMatrix{{q}}), q);
  EXPECT_EQ(det(QMatrix{{q}}), q);
  EXPECT_EQ(det(QMatrix(0, 0)), Quaternion{1.0});

  std::mt19937_64 rng(42);
  const Quaternion a = random_quaternion(rng);
  const Quaternion b = random_quaternion(rng);
  const Quaternion c = random_quaternion(rng);
  const Quaternion d = random_quaternion(rng);
  const QMatrix m{{a, b}, {c, d}};
  EXPECT_TRUE(near(row_expansion(m), a * d - b * c, 1e-15));
  // det starts each cycle at its largest index: a22 a11 and a21 a12.
  EXPECT_TRUE(near(det(m), d * a - c * b, 1e-15));
}

TEST(DetTest, HermitianDeterminantIsRealAndEqualsEigenvalueProduct) {
  std::mt19937_64 rng(1234);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      const HermitianQMatrix h = random_hermitian(n, rng);
      const Quaternion d = det(h.matrix());
      EXPECT_LT(std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)}), 1e-10);
      EXPECT_TRUE(near(row_expansion(h.matrix()), d, 1e-10));
      const Spectrum s = right_eigenvalues(h);
      double prod = 1.0;
      for (double v : s.values) prod *= v;
      EXPECT_NEAR(d.w, prod, 1e-8 * std::max(1.0, std::abs(prod)));
    }
}

TEST(DetTest, ComplexityLimitAndShape) {
  EXPECT_NO_THROW(det(QMatrix::identity(8)));
  for (auto f : {+[] { det(QMatrix::identity(9)); }, +[] { row_expansion(QMatrix::identity(9)); },
                 +[] { qadj(QMatrix::identity(9)); }}) {
    try {
      f();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kComplexityLimit);
    }
  }
  EXPECT_THROW(det(QMatrix(2, 3)), Error);
}

TEST(QadjTest, ExampleCharacteristicMatrixComponents) {
  const double root13 = std::sqrt(13.0);
  const double lambda = 2.5 + root13 / 2.0;
  const QMatrix b = qadj(characteristic_matrix(example_matrix(), lambda));
  const RealMatrix b0{{0.5 + root13 / 2.0, 0}, {0, -0.5 + root13 / 2.0}};
  const RealMatrix b1{{0, 1}, {-1, 0}};
  const RealMatrix b2{{0, -1}, {1, 0}};
  const RealMatrix b3{{0, 1}, {-1, 0}};
  EXPECT_LT(max_entry_distance(b, from_components(b0, b1, b2, b3)), 1e-10);
}

TEST(QadjTest, OneByOne) { EXPECT_EQ(qadj(QMatrix{{Quaternion(3, 1, 0, 0)}}), QMatrix{{1.0}}); }

TEST(QadjTest, LeadingPairConventionSatisfiesAdjugateIdentity) {
  std::mt19937_64 rng(77);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int t = 0; t < 20; ++t) {
      const HermitianQMatrix h = random_hermitian(n, rng);
      const double bound = 1e-9 * (1.0 + std::pow(h.matrix().inf_norm(), double(n)));
      EXPECT_LT(adjugate_residual(h.matrix(), SubmatrixConvention::kLeadingPair), bound) << "n=" << n;
    }
}

TEST(QadjTest, OtherConventionsBreakTheIdentityFromOrderThree) {
  std::mt19937_64 rng(78);
  for (auto conv : {SubmatrixConvention::kPlainDeletion, SubmatrixConvention::kDiagonalAligned}) {
    const HermitianQMatrix h2 = random_hermitian(2, rng);
    EXPECT_LT(adjugate_residual(h2.matrix(), conv), 1e-12);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) worst = std::max(worst, adjugate_residual(random_hermitian(3, rng).matrix(), conv));
    EXPECT_GT(worst, 1e-3);
  }
}

TEST(QadjTest, HermitianInputGivesHermitianAdjugate) {
  std::mt19937_64 rng(79);
  const HermitianQMatrix h = random_hermitian(4, rng);
  const QMatrix adj = qadj(h.matrix());
  EXPECT_LT(max_entry_distance(adj, conj_transpose(adj)), 1e-12);
}

TEST(CommutativeDegenerationTest, RealInputsMatchClassicalFormulas) {
  std::mt19937_64 rng(5);
  for (bool symmetric : {true, false})
    for (std::size_t n = 1; n <= 5; ++n)
      for (int t = 0; t < 4; ++t) {
        const RealMatrix m = random_real(n, rng, symmetric);
        const QMatrix q = embed(m);
        const double expected = classical_det(m);
        EXPECT_TRUE(near(det(q), Quaternion{expected}, 1e-12));
        EXPECT_TRUE(near(row_expansion(q), Quaternion{expected}, 1e-12));
        EXPECT_LT(max_entry_distance(qadj(q), embed(classical_adjugate(m))), 1e-12);
      }
}

TEST(DetInvarianceTest, Examples) {
  const HermitianQMatrix a = validate_hermitian(example_matrix());
  EXPECT_LT(det_invariance_check(a, 2, 1, Quaternion::i()), 1e-10);
  EXPECT_EQ(det_invariance_check(a, 2, 1, Quaternion{}), 0.0);
  EXPECT_THROW(det_invariance_check(a, 1, 1, Quaternion::i()), Error);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const HermitianQMatrix h = random_hermitian(3, rng);
    std::uniform_int_distribution<std::size_t> idx(1, 3);
    std::size_t k = idx(rng);
    std::size_t j = idx(rng);
    if (j == k) j = k % 3 + 1;
    EXPECT_LT(det_invariance_check(h, k, j, random_quaternion(rng)), 1e-9);
  }
}

}  // namespace
}  // namespace qeei
