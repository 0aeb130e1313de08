#include <gtest/gtest.h>

#include <cmath>

#include "darboux/coupled_solver.hpp"
#include "darboux/scattering.hpp"
#include "darboux/verification.hpp"

using namespace darboux;

namespace {

Eigen::MatrixXd centrifugal(double r, const std::vector<int>& ls) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ls.size()), static_cast<Eigen::Index>(ls.size()));
  for (std::size_t i = 0; i < ls.size(); ++i) v(i, i) = ls[i] * (ls[i] + 1) / (r * r);
  return v;
}

// l = 0 square well of depth `depth` and radius R.
cplx square_well_s(double k, double depth, double radius) {
  const double q = std::sqrt(k * k + depth);
  const double delta = std::atan(k * std::tan(q * radius) / q) - k * radius;
  return std::exp(2.0 * kI * delta);
}

CoupledSolverOptions options(double r_max) {
  CoupledSolverOptions o;
  o.r_max = r_max;
  return o;
}

}  // namespace

TEST(RiccatiHankel, LowOrders) {
  for (double x : {0.3, 2.0, 15.0}) {
    EXPECT_LT(std::abs(riccati_hankel(0, x) - std::exp(kI * x)), 1e-15);
    EXPECT_LT(std::abs(riccati_hankel(1, x) - (-kI) * std::exp(kI * x) * (1.0 + kI / x)), 1e-14);
  }
}

TEST(RiccatiHankel, SolvesTheFreeEquationWithUnitWronskian) {
  for (int l : {0, 1, 2, 4}) {
    for (double x : {0.7, 3.0}) {
      const double h = 1e-4;
      const cplx d2 = (riccati_hankel(l, x + h) - 2.0 * riccati_hankel(l, x) + riccati_hankel(l, x - h)) / (h * h);
      const cplx rhs = (l * (l + 1) / (x * x) - 1.0) * riccati_hankel(l, x);
      EXPECT_LT(std::abs(d2 - rhs), 1e-5 * std::max(1.0, std::abs(rhs)));
      const cplx hp = riccati_hankel(l, x), dhp = riccati_hankel_derivative(l, x);
      EXPECT_LT(std::abs(hp * std::conj(dhp) - dhp * std::conj(hp) + 2.0 * kI), 1e-14 * std::abs(hp) * std::abs(dhp));
    }
  }
}

TEST(NumericalSMatrix, FreeParticle) {
  for (const std::vector<int>& ls : {std::vector<int>{0, 0}, std::vector<int>{2, 0}}) {
    const auto s = numerical_smatrix([&](double r) { return centrifugal(r, ls); }, 0.8, ls, options(10.0));
    EXPECT_LT((s - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-8);
  }
}

TEST(NumericalSMatrix, SquareWellS) {
  const auto v = [](double r) {
    Eigen::MatrixXd m(1, 1);
    m(0, 0) = r < 2.0 ? -1.5 : 0.0;
    return m;
  };
  const auto s = numerical_smatrix(v, 0.7, {0}, options(8.0));
  EXPECT_LT(std::abs(s(0, 0) - std::exp(2.0 * kI * 1.5784786386317522)), 1e-6);
  EXPECT_LT(std::abs(s(0, 0) - square_well_s(0.7, 1.5, 2.0)), 1e-6);
}

TEST(NumericalSMatrix, SquareWellD) {
  // scipy spherical Bessel matching (tests/oracles/reference_values.py).
  const auto v = [](double r) {
    Eigen::MatrixXd m(1, 1);
    m(0, 0) = 6.0 / (r * r) + (r < 2.0 ? -1.5 : 0.0);
    return m;
  };
  const auto s = numerical_smatrix(v, 0.7, {2}, options(12.0));
  EXPECT_LT(std::abs(s(0, 0) - std::exp(2.0 * kI * 0.0249351007740393)), 1e-6);
}

TEST(NumericalSMatrix, RotatedUncoupledWells) {
  const double c = std::cos(0.4), s = std::sin(0.4);
  Eigen::Matrix2d o;
  o << c, -s, s, c;
  const auto v = [&](double r) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    if (r < 2.0) m = o * Eigen::Vector2d(-1.5, -0.8).asDiagonal() * o.transpose();
    return m;
  };
  const double k = 0.9;
  const auto got = numerical_smatrix(v, k, {0, 0}, options(8.0));
  Eigen::Matrix2cd expected = o.cast<cplx>() *
                              Eigen::Vector2cd(square_well_s(k, 1.5, 2.0), square_well_s(k, 0.8, 2.0)).asDiagonal() *
                              o.transpose().cast<cplx>();
  EXPECT_LT((got - expected).norm(), 1e-6);
}

TEST(NumericalSMatrix, SechSquaredWell) {
  // One cosh link: V = -2 kappa^2 sech^2(kappa r), regular solution
  // -q sin(qr) - kappa tanh(kappa r) cos(qr), so S = (q + i kappa) / (q - i kappa).
  const double kappa = 0.8;
  const ChainSpec chain(2, 1, {ChannelPotential::free(), ChannelPotential::free()},
                        {TransformationMatrix::singular(
                            2, 1, {{1.0, make_basis(BasisSolution::Kind::cosh, kappa, ChannelPotential::free())}})});
  const auto table = compute_potential(chain, RadialGrid::logarithmic(1e-3, 25.0, 1500));
  for (double q : {0.3, 1.2}) {
    const auto s = numerical_smatrix(table, q, {0, 0});
    EXPECT_LT(std::abs(s(0, 0) - (q + kI * kappa) / (q - kI * kappa)), 1e-6) << q;
    EXPECT_LT(std::abs(s(1, 1) - 1.0), 1e-8);
    EXPECT_LT(std::abs(s(0, 1)), 1e-8);
  }
}

TEST(NumericalSMatrix, KvgAgreesWithClosedForm) {
  const KvGParameters p;
  const auto table = compute_potential(build_kvg_chain(p), RadialGrid::logarithmic(1e-2, 25.0, 2000));
  const auto numeric = kvg_to_closed_form_convention(numerical_smatrix(table, 0.5, {2, 0}));
  EXPECT_LT((numeric - closed_form_smatrix_at(p, 0.5)).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(NumericalSMatrix, TailMustBeCentrifugal) {
  const auto v = [](double r) {
    Eigen::MatrixXd m(1, 1);
    m(0, 0) = -1.0 / r;
    return m;
  };
  EXPECT_THROW(numerical_smatrix(v, 0.5, {0}, options(10.0)), NumericalError);
}

TEST(InterpolatePotential, RejectsOutsideAndPoles) {
  PotentialTable t;
  for (double r : {1.0, 2.0, 3.0, 4.0, 5.0}) {
    t.grid.push_back(r);
    t.values.push_back(Matrix::Constant(1, 1, cplx(1.0 / r)));
    t.pole.push_back(false);
  }
  const auto f = interpolate_potential(t);
  EXPECT_NEAR(f(2.5)(0, 0), 0.4, 2e-2);
  EXPECT_THROW(f(0.5), DomainError);
  t.pole[2] = true;
  EXPECT_THROW(interpolate_potential(t)(2.5), DomainError);
}
