#include <gtest/gtest.h>

#include <cmath>

#include "darboux/assembly.hpp"
#include "darboux/chain.hpp"

using namespace darboux;
using K = BasisSolution::Kind;

namespace {

const auto kFree = ChannelPotential::free();

ScaledBasis entry(K kind, cplx k, cplx c = 1.0) { return {c, make_basis(kind, k, kFree)}; }

TransformationMatrix cosh_link(double k) { return TransformationMatrix::singular(2, 1, {entry(K::cosh, k)}); }

TransformationMatrix regular_link(double k) {
  return TransformationMatrix::regular(2, {entry(K::cosh, k), entry(K::exp, -k, 0.5), entry(K::sinh, k, -0.3),
                                           entry(K::cosh, k, 1.2)});
}

ChainSpec chain_of(std::vector<TransformationMatrix> links, std::size_t m = 1) {
  return ChainSpec(2, m, {kFree, kFree}, std::move(links));
}

}  // namespace

TEST(TransformationMatrix, SingularLinkHasIdentityBlock) {
  const auto u = cosh_link(0.8);
  const Matrix v = u.value(1.5);
  EXPECT_LT(std::abs(v(0, 0) - std::cosh(1.2)), 1e-14);
  EXPECT_EQ(v(1, 1), cplx(1.0));
  EXPECT_EQ(v(0, 1), cplx{});
  EXPECT_EQ(v(1, 0), cplx{});
  EXPECT_LT(std::abs(u.spectral() - cplx(-0.64)), 1e-15);
}

TEST(TransformationMatrix, DefinitionResidual) {
  for (const auto& u : {cosh_link(0.8), regular_link(1.1)})
    for (double r : {0.3, 1.0, 5.0}) EXPECT_LT(u.equation_residual(r, {kFree, kFree}), 1e-8);
}

TEST(TransformationMatrix, EntriesMustShareTheSpectralValue) {
  EXPECT_THROW(TransformationMatrix::regular(2, {entry(K::cosh, 1.0), zero_entry(), zero_entry(), entry(K::cosh, 2.0)}),
               ArgumentError);
}

TEST(ChainSpec, SingularLinksComeFirst) {
  EXPECT_THROW(chain_of({regular_link(1.1), cosh_link(0.8)}), ArgumentError);
  EXPECT_NO_THROW(chain_of({cosh_link(0.8), regular_link(1.1)}));
}

TEST(ChainSpec, SpectralValuesMustDiffer) { EXPECT_THROW(chain_of({cosh_link(0.8), regular_link(0.8)}), ArgumentError); }

TEST(ChainSpec, SubsystemSizeMustMatch) {
  const auto wide = TransformationMatrix::singular(3, 2, {entry(K::cosh, 1.0), zero_entry(), zero_entry(), entry(K::cosh, 1.0)});
  EXPECT_THROW(ChainSpec(3, 1, {kFree, kFree, kFree}, {wide}), ArgumentError);
}

TEST(ChainSpec, BasisMustBelongToItsChannel) {
  const auto d = ChannelPotential::centrifugal(2);
  EXPECT_THROW(ChainSpec(2, 1, {d, kFree}, {cosh_link(0.8)}), ArgumentError);
}

TEST(ChainSpec, Prefix) {
  const auto chain = chain_of({cosh_link(0.8), cosh_link(1.3), regular_link(0.5)});
  EXPECT_EQ(chain.singular_count(), 2u);
  const auto p = chain.prefix(2);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.singular_count(), 2u);
}

TEST(ApplyDm, FullDerivativeWhenMEqualsN) {
  const Matrix v = Matrix::Random(2, 2), d = Matrix::Random(2, 2);
  EXPECT_EQ(apply_Dm(v, d, 2), d);
}

TEST(ApplyDm, RowwiseDefinition) {
  const double r = 1.7;
  Matrix value(2, 2), derivative(2, 2);
  value << r, r * r, r * r * r, r * r * r * r;
  derivative << 1.0, 2 * r, 3 * r * r, 4 * r * r * r;
  Matrix expected(2, 2);
  expected << 1.0, 2 * r, r * r * r, r * r * r * r;
  EXPECT_EQ(apply_Dm(value, derivative, 1), expected);
}

TEST(ApplyDm, VectorSecondComponentUntouched) {
  const double r = 0.4;
  Matrix value(2, 1), derivative(2, 1);
  value << std::sin(r), std::cos(r);
  derivative << std::cos(r), -std::sin(r);
  const Matrix out = apply_Dm(value, derivative, 1);
  EXPECT_EQ(out(0, 0), cplx(std::cos(r)));
  EXPECT_EQ(out(1, 0), cplx(std::cos(r)));
  EXPECT_EQ(apply_partial_m(1.0, 2.0, 0, 1), cplx(2.0));
  EXPECT_EQ(apply_partial_m(1.0, 2.0, 1, 1), cplx(1.0));
  EXPECT_THROW(apply_Dm(value, derivative, 0), ArgumentError);
  EXPECT_THROW(apply_Dm(value, derivative, 3), ArgumentError);
}

TEST(OperatorSchedule, AllSingular) {
  // Block rows/columns 0-based: the last block row of the last column is D^(M-1),
  // block row 2 of column 1 is d^2.
  const auto chain = chain_of({cosh_link(0.5), cosh_link(0.9), cosh_link(1.4)});
  EXPECT_EQ(operator_schedule(2, 2, chain), (OperatorDescriptor{2, 0}));
  EXPECT_EQ(operator_schedule(2, 1, chain), (OperatorDescriptor{0, 2}));
  EXPECT_EQ(operator_schedule(0, 0, chain), (OperatorDescriptor{0, 0}));
}

TEST(OperatorSchedule, RegularTail) {
  // M = 1: the regular column, block row M+1 carries d D_m^M.
  const auto chain = chain_of({cosh_link(0.5), regular_link(1.2), regular_link(0.7)});
  EXPECT_EQ(operator_schedule(2, 1, chain), (OperatorDescriptor{1, 1}));
  EXPECT_EQ(operator_schedule(1, 2, chain), (OperatorDescriptor{1, 0}));
  EXPECT_THROW(operator_schedule(4, 0, chain), ArgumentError);
}

TEST(EvalBlock, CoshLink) {
  const double k = 0.6, r = 2.0;
  const auto u = cosh_link(k);
  const Matrix id = eval_block(u, {0, 0}, 1, r);
  EXPECT_EQ(id, u.value(r));
  const Matrix second = eval_block(u, {0, 2}, 1, r);
  EXPECT_LT(std::abs(second(0, 0) - k * k * std::cosh(k * r)), 1e-14);
  EXPECT_EQ(second(1, 1), cplx{});
  const Matrix dm = eval_block(u, {1, 0}, 1, r);
  EXPECT_LT(std::abs(dm(0, 0) - k * std::sinh(k * r)), 1e-14);
  EXPECT_EQ(dm(1, 1), cplx(1.0));
}

TEST(Assembly, OneLinkWIsTheLink) {
  const auto chain = chain_of({regular_link(0.9)});
  const auto w = build_W(chain, 1.3).values();
  const Matrix u = chain.link(0).value(1.3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(w(i, j), u(i, j));
}

TEST(Assembly, TwoSingularLinksPattern) {
  const double r = 0.8;
  const auto chain = chain_of({cosh_link(0.5), cosh_link(1.1)});
  const auto w = build_W(chain, r).values();
  ASSERT_EQ(w.rows(), 4u);
  const Matrix u1 = chain.link(0).value(r), du1 = chain.link(0).derivative(r, 1);
  const Matrix u2 = chain.link(1).value(r), du2 = chain.link(1).derivative(r, 1);
  const Matrix dm_u2 = apply_Dm(u2, du2, 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(w(i, j), u1(i, j));
      EXPECT_EQ(w(i, j + 2), u2(i, j));
      EXPECT_EQ(w(i + 2, j), du1(i, j));
      EXPECT_EQ(w(i + 2, j + 2), dm_u2(i, j));
    }
}

TEST(Assembly, OwnColumnGivesZeroBorderedDeterminant) {
  const auto chain = chain_of({cosh_link(0.7)});
  const SolutionVector psi{entry(K::cosh, 0.7), zero_entry()};
  for (std::size_t j = 0; j < 2; ++j)
    EXPECT_LT(std::abs(determinant(SquareMatrix(build_Wj(chain, psi, j, 1.1).values()))), 1e-13);
}

TEST(Assembly, UnitVectorInSubsystemTwo) {
  const auto chain = chain_of({cosh_link(0.7)});
  const SolutionVector psi{zero_entry(), unit_entry()};
  const double r = 1.4;
  const cplx w = determinant(SquareMatrix(build_W(chain, r).values()));
  EXPECT_LT(std::abs(determinant(SquareMatrix(build_Wj(chain, psi, 1, r).values())) - w), 1e-13);
}

TEST(Assembly, WijVanishesOnTheDiagonalBeyondM) {
  const auto chain = chain_of({cosh_link(0.7), cosh_link(1.2)});
  EXPECT_LT(std::abs(determinant(SquareMatrix(build_Wij(chain, 1, 1, 0.9).values()))), 1e-13);
}

TEST(Assembly, KOrderBeyondClosureIsACapabilityError) {
  std::vector<TransformationMatrix> links;
  for (int i = 0; i < 17; ++i) {
    const double k = 0.3 + 0.1 * i;
    links.push_back(TransformationMatrix::regular(2, {entry(K::cosh, k), zero_entry(), zero_entry(), entry(K::cosh, k)}));
  }
  const ChainSpec chain(2, 1, {kFree, kFree}, std::move(links));
  EXPECT_THROW(build_W(chain, 1.0), CapabilityError);
}

TEST(Assembly, SwappingLinksKeepsTheDeterminantMagnitude) {
  for (double r : {0.4, 1.5, 3.0}) {
    const auto a = log_determinant(build_W(chain_of({cosh_link(0.6), regular_link(0.9), regular_link(1.3)}), r).values());
    const auto b = log_determinant(build_W(chain_of({cosh_link(0.6), regular_link(1.3), regular_link(0.9)}), r).values());
    EXPECT_NEAR(a.log_abs, b.log_abs, 1e-9);
    const auto c = log_determinant(build_W(chain_of({cosh_link(0.6), cosh_link(1.1)}), r).values());
    const auto d = log_determinant(build_W(chain_of({cosh_link(1.1), cosh_link(0.6)}), r).values());
    EXPECT_NEAR(c.log_abs, d.log_abs, 1e-9);
  }
}

TEST(Assembly, FullSubsystemReducesToTheRegularAssembly) {
  const auto one = ChannelPotential::free();
  std::vector<TransformationMatrix> singular, regular;
  for (double k : {0.5, 0.9, 1.4}) {
    singular.push_back(TransformationMatrix::singular(1, 1, {entry(K::cosh, k)}));
    regular.push_back(TransformationMatrix::regular(1, {entry(K::cosh, k)}));
  }
  const auto ws = build_W(ChainSpec(1, 1, {one}, singular), 1.2).values();
  const auto wr = build_W(ChainSpec(1, 1, {one}, regular), 1.2).values();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(ws(i, j), wr(i, j));
}

TEST(TransformationMatrix, SingularLogDerivativeIsBlockDiagonal) {
  const auto u = TransformationMatrix::singular(
      3, 2, {entry(K::cosh, 0.8), entry(K::sinh, 0.8, 0.4), entry(K::exp, -0.8), entry(K::cosh, 0.8, 2.0)});
  const Matrix w = u.derivative(1.1, 1) * u.value(1.1).inverse();
  EXPECT_LT(w.block(2, 0, 1, 3).norm(), 1e-15);
  EXPECT_LT(w.block(0, 2, 2, 1).norm(), 1e-15);
}
