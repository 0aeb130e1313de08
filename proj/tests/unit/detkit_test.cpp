#include <gtest/gtest.h>

#include <random>

#include "darboux/detkit.hpp"

using namespace darboux;

namespace {

// Laplace expansion along the first row; test-only oracle.
template <class T>
T cofactor_det(const DenseMatrix<T>& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  T out{0};
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    const T minor = a(0, c) * cofactor_det(a.select(rows, cols));
    if (c % 2 == 0) out += minor;
    else out -= minor;
  }
  return out;
}

IntegerMatrix random_integer(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntegerMatrix m(n, n);
  for (auto& x : m.storage()) x = d(rng);
  return m;
}

ComplexMatrix to_complex(const IntegerMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.storage().size(); ++i) out.storage()[i] = static_cast<double>(m.storage()[i]);
  return out;
}

}  // namespace

TEST(Determinant, Identity) {
  EXPECT_EQ(determinant(SquareMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), cplx(1.0));
}

TEST(Determinant, Diagonal) { EXPECT_NEAR(std::abs(determinant(SquareMatrix{{2, 0}, {0, 3}}) - 6.0), 0.0, 1e-15); }

TEST(Determinant, ExactlySingularIsZero) {
  EXPECT_EQ(determinant(SquareMatrix{{1, 2}, {2, 4}}), cplx{});
  const auto d = log_determinant(SquareMatrix{{1, 2}, {2, 4}});
  EXPECT_EQ(d.phase, cplx{});
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_integer(rng, 5, 9);
    const BigInt expected = cofactor_det(m);
    EXPECT_EQ(exact_determinant(m), expected);
    const cplx floating = determinant(SquareMatrix(to_complex(m)));
    EXPECT_NEAR(floating.real(), static_cast<double>(expected), 1e-9 * std::max(1.0, std::abs(static_cast<double>(expected))));
    EXPECT_NEAR(floating.imag(), 0.0, 1e-9);
  }
}

TEST(Determinant, ComplexMatchesCofactorExpansion) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  ComplexMatrix m(4, 4);
  for (auto& x : m.storage()) x = cplx(g(rng), g(rng));
  EXPECT_LT(std::abs(determinant(SquareMatrix(m)) - cofactor_det(m)), 1e-12);
}

TEST(Determinant, LogFormSurvivesOverflow) {
  ComplexMatrix m(3, 3);
  m(0, 0) = 1e200;
  m(1, 1) = -1e200;
  m(2, 2) = 1e-300;
  const auto d = log_determinant(m);
  EXPECT_NEAR(d.log_abs, 100.0 * std::log(10.0), 1e-9);
  EXPECT_NEAR(std::abs(d.phase - cplx(-1.0)), 0.0, 1e-15);
}

TEST(Determinant, BareissKnownValue) {
  // Vandermonde on 1..4: prod (x_j - x_i) = 12.
  IntegerMatrix v(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    BigInt p = 1;
    for (std::size_t j = 0; j < 4; ++j) {
      v(i, j) = p;
      p *= static_cast<int>(i + 1);
    }
  }
  EXPECT_EQ(exact_determinant(v), BigInt(12));
}

TEST(EmborderingMinor, FullMatrixWhenBlockFillsIt) {
  const ComplexMatrix a{{1, 2}, {3, 4}};
  EXPECT_NEAR(std::abs(embordering_minor(a, 1, 1, 1) - cplx(-2.0)), 0.0, 1e-14);
}

TEST(EmborderingMinor, ThreeByThree) {
  ComplexMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  EXPECT_NEAR(std::abs(embordering_minor(a, 1, 1, 1) - cplx(-3.0)), 0.0, 1e-14);
  a(2, 2) = 1234.0;
  EXPECT_NEAR(std::abs(embordering_minor(a, 1, 1, 1) - cplx(-3.0)), 0.0, 1e-14);
}

TEST(EmborderingMinor, RejectsIndicesInsideTheBlock) {
  const ComplexMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  EXPECT_THROW(embordering_minor(a, 2, 1, 2), ArgumentError);
  EXPECT_THROW(embordering_minor(a, 1, 3, 1), ArgumentError);
  EXPECT_THROW(embordering_minor(a, 0, 1, 1), ArgumentError);
}

TEST(Sylvester, LastBorderReducesToDeterminant) {
  const IntegerMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  const auto s = sylvester_check(a, 2);
  EXPECT_EQ(s.lhs, s.rhs);
  EXPECT_EQ(s.lhs, exact_determinant(a));
}

TEST(Sylvester, HandComputedThreeByThree) {
  const IntegerMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  const auto s = sylvester_check(a, 1);
  EXPECT_EQ(s.lhs, BigInt(-3));
  EXPECT_EQ(s.rhs, BigInt(-3));
}

TEST(Sylvester, ExactOnRandomIntegerMatrices) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_integer(rng, 6, 20);
    const std::size_t p = 1 + static_cast<std::size_t>(trial % 5);
    const auto s = sylvester_check(a, p);
    EXPECT_EQ(s.lhs, s.rhs) << "trial " << trial;
  }
}

TEST(Sylvester, FloatingRelativeError) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 60; ++trial) {
    ComplexMatrix a(6, 6);
    for (auto& x : a.storage()) x = cplx(g(rng), g(rng));
    const auto s = sylvester_check(a, 1 + static_cast<std::size_t>(trial % 5));
    EXPECT_LT(std::abs(s.lhs - s.rhs) / std::abs(s.rhs), 1e-9);
  }
}

TEST(Sylvester, RejectsBadBlock) {
  const IntegerMatrix a{{1, 2}, {3, 4}};
  EXPECT_THROW(sylvester_check(a, 0), ArgumentError);
  EXPECT_THROW(sylvester_check(a, 2), ArgumentError);
}

TEST(RowReplacement, IdentityBlockIsExact) {
  // p = 2, n = 3: a 4 x 5 matrix whose leading block is the identity.
  const IntegerMatrix a{{1, 0, 3, -1, 2}, {0, 1, 5, 2, -4}, {2, -3, 7, 1, 1}, {4, 1, -2, 6, 3}};
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t t = 0; t < 2; ++t)
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t k = 2; k < 5; ++k) {
          const auto r = row_replacement_check(a, 2, {j, k, t, s});
          EXPECT_EQ(r.lhs, r.rhs);
        }
}

TEST(RowReplacement, RandomComplexInstances) {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix a(4, 5);
    for (auto& x : a.storage()) x = cplx(g(rng), g(rng));
    const RowReplacementIndices idx{static_cast<std::size_t>(trial % 2), 2 + static_cast<std::size_t>(trial % 3),
                            static_cast<std::size_t>((trial / 2) % 2), static_cast<std::size_t>((trial / 3) % 2)};
    const auto r = row_replacement_check(a, 2, idx);
    const double scale = std::max({std::abs(r.lhs), std::abs(r.rhs_terms[0]), std::abs(r.rhs_terms[1])});
    EXPECT_LT(std::abs(r.lhs - r.rhs), 1e-10 * scale);
  }
}

TEST(RowReplacement, SameTrailingRowGivesZeroDifference) {
  const IntegerMatrix a{{2, 1, 3, -1}, {1, 3, 5, 2}, {2, -3, 7, 1}, {4, 1, -2, 6}};
  const auto r = row_replacement_check(a, 2, {1, 2, 1, 0});
  EXPECT_EQ(r.rhs, BigInt(0));
  EXPECT_EQ(r.lhs, r.rhs);
}

TEST(RowReplacement, SingularBlockIsAPreconditionError) {
  const IntegerMatrix a{{1, 2, 3}, {2, 4, 5}, {1, 1, 1}, {0, 1, 2}};
  EXPECT_THROW(row_replacement_check(a, 2, {0, 2, 1, 0}), PreconditionError);
}
