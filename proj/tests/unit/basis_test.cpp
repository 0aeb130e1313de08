#include <gtest/gtest.h>

#include <cmath>

#include "darboux/basis.hpp"

using namespace darboux;
using K = BasisSolution::Kind;

namespace {

const auto kFree = ChannelPotential::free();
const auto kDWave = ChannelPotential::centrifugal(2);

// Five-point central difference of the basis value; test-only oracle.
cplx fd_derivative(const BasisSolution& b, double r, double h = 1e-3) {
  return (-b.value(r + 2 * h) + 8.0 * b.value(r + h) - 8.0 * b.value(r - h) + b.value(r - 2 * h)) / (12.0 * h);
}

}  // namespace

TEST(Basis, RegularSVanishesAtOrigin) {
  const auto b = make_basis(K::regular_s, 0.7, kFree);
  EXPECT_EQ(b.value(0.0), cplx{});
}

TEST(Basis, JostSAndItsDerivative) {
  const double k = 0.9;
  const auto b = make_basis(K::jost_s, k, kFree);
  for (double r : {0.3, 1.0, 4.5}) {
    EXPECT_LT(std::abs(b.value(r) - std::exp(kI * k * r)), 1e-14);
    EXPECT_LT(std::abs(b.derivative(r, 1) - kI * k * std::exp(kI * k * r)), 1e-14);
  }
}

TEST(Basis, RegularDClosedForm) {
  const double k = 1.3;
  const auto b = make_basis(K::regular_d, k, kDWave);
  for (double r : {0.5, 2.0, 7.0}) {
    const double x = k * r;
    const cplx expected = kI * ((3.0 - x * x) * std::sin(x) - 3.0 * x * std::cos(x)) / (x * x);
    EXPECT_LT(std::abs(b.value(r) - expected), 1e-13);
    EXPECT_LT(std::abs(b.equation_residual(r)), 1e-8 * std::max(1.0, std::abs(b.value(r))));
  }
}

TEST(Basis, JostDClosedForm) {
  const cplx k{1.22, 1.22};
  const auto b = make_basis(K::jost_d, k, kDWave);
  for (double r : {0.4, 1.5, 6.0}) {
    const cplx x = k * r;
    const cplx expected = std::exp(kI * x) * (1.0 + 3.0 * kI / x - 3.0 / (x * x));
    EXPECT_LT(std::abs(b.value(r) - expected), 1e-12 * std::abs(expected));
  }
}

TEST(Basis, DerivativesMatchFiniteDifferences) {
  const std::vector<std::pair<K, cplx>> cases{{K::cosh, 0.8},       {K::sinh, 1.1},          {K::exp, -0.6},
                                               {K::jost_s, 0.5},     {K::regular_s, {0.3, 0.4}}};
  for (const auto& [kind, k] : cases) {
    const auto b = make_basis(kind, k, kFree);
    for (double r : {0.7, 2.5}) {
      const cplx exact = b.derivative(r, 1);
      EXPECT_LT(std::abs(exact - fd_derivative(b, r)), 1e-9 * std::max(1.0, std::abs(exact))) << b.label();
    }
  }
  const auto d = make_basis(K::jost_d, cplx(0.9, 0.2), kDWave);
  EXPECT_LT(std::abs(d.derivative(1.7, 1) - fd_derivative(d, 1.7)), 1e-9 * std::abs(d.derivative(1.7, 1)));
}

TEST(Basis, HighOrderDerivativesSolveTheEquation) {
  // b^(p+2) = (v - lambda) b^(p) for free channels.
  const auto b = make_basis(K::cosh, 0.75, kFree);
  for (int p = 0; p <= 10; ++p) {
    const cplx lhs = b.derivative(1.3, p + 2);
    const cplx rhs = -b.spectral() * b.derivative(1.3, p);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Basis, SmallArgumentBranchIsContinuous) {
  // f_d cancels catastrophically for small kr; the series branch must agree
  // with the closed form where both are accurate.
  const double k = 0.5;
  const auto b = make_basis(K::regular_d, k, kDWave);
  for (double r : {1e-3, 1e-2, 5e-2}) {
    const double x = k * r;
    // i x^3 / 15 (1 - x^2/14 + x^4/504)
    const cplx series = kI * x * x * x / 15.0 * (1.0 - x * x / 14.0 + x * x * x * x / 504.0);
    EXPECT_LT(std::abs(b.value(r) - series), 1e-10 * std::abs(series));
  }
}

TEST(Basis, SpectralValues) {
  EXPECT_EQ(make_basis(K::jost_s, 0.5, kFree).spectral(), cplx(0.25));
  EXPECT_EQ(make_basis(K::cosh, 0.5, kFree).spectral(), cplx(-0.25));
}

TEST(Basis, ConjugateFunction) {
  const auto b = make_basis(K::jost_d, cplx(1.22, 1.22), kDWave);
  const auto c = b.conjugated();
  EXPECT_LT(std::abs(c.value(2.0) - std::conj(b.value(2.0))), 1e-14);
  EXPECT_EQ(c.spectral(), std::conj(b.spectral()));
}

TEST(Basis, ChannelMismatchIsRejected) {
  EXPECT_THROW(make_basis(K::jost_d, 1.0, kFree), ArgumentError);
  EXPECT_THROW(make_basis(K::cosh, 1.0, kDWave), ArgumentError);
  EXPECT_THROW(make_basis(K::jost_d, 0.0, kDWave), DomainError);
  EXPECT_THROW(parse_basis_kind("bessel"), ArgumentError);
}

TEST(Basis, OrderBeyondClosureIsACapabilityError) {
  const auto b = make_basis(K::cosh, 1.0, kFree);
  EXPECT_THROW(b.derivative(1.0, Taylor::kMaxOrder + 2), CapabilityError);
}

TEST(Basis, CentrifugalChannelRejectsOrigin) {
  EXPECT_THROW(kDWave.value(0.0), DomainError);
  EXPECT_DOUBLE_EQ(kDWave.value(2.0), 1.5);
}
