#include "darboux/stepwise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "darboux/parallel.hpp"

namespace darboux {

MatrixSeries::MatrixSeries(std::vector<Matrix> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw ArgumentError("MatrixSeries needs at least one coefficient");
}

MatrixSeries MatrixSeries::zero(Eigen::Index rows, Eigen::Index cols, int order) {
  return MatrixSeries(std::vector<Matrix>(static_cast<std::size_t>(order) + 1, Matrix::Zero(rows, cols)));
}

MatrixSeries MatrixSeries::of(const TransformationMatrix& u, double r, int order) {
  std::vector<Matrix> c;
  double fact = 1.0;
  for (int p = 0; p <= order; ++p) {
    if (p > 0) fact *= p;
    c.push_back(u.derivative(r, p) / fact);
  }
  return MatrixSeries(std::move(c));
}

MatrixSeries MatrixSeries::of(const SolutionVector& psi, double r, int order) {
  std::vector<Matrix> c;
  double fact = 1.0;
  for (int p = 0; p <= order; ++p) {
    if (p > 0) fact *= p;
    Matrix col(static_cast<Eigen::Index>(psi.size()), 1);
    for (std::size_t i = 0; i < psi.size(); ++i) col(static_cast<Eigen::Index>(i), 0) = psi[i].derivative(r, p) / fact;
    c.push_back(std::move(col));
  }
  return MatrixSeries(std::move(c));
}

Matrix MatrixSeries::derivative(int p) const {
  double fact = 1.0;
  for (int q = 2; q <= p; ++q) fact *= q;
  return c_[static_cast<std::size_t>(p)] * fact;
}

MatrixSeries MatrixSeries::differentiated() const {
  if (order() < 1) throw CapabilityError("MatrixSeries: no derivative left");
  std::vector<Matrix> c;
  for (int p = 0; p < order(); ++p) c.push_back(c_[p + 1] * static_cast<double>(p + 1));
  return MatrixSeries(std::move(c));
}

MatrixSeries MatrixSeries::dm_applied(std::size_t m) const {
  MatrixSeries d = differentiated();
  const auto keep = static_cast<Eigen::Index>(m);
  for (int p = 0; p <= d.order(); ++p) {
    const auto rows = c_[p].rows();
    if (keep < rows) d.c_[p].bottomRows(rows - keep) = c_[p].bottomRows(rows - keep);
  }
  return d;
}

MatrixSeries MatrixSeries::truncated(int order) const {
  return MatrixSeries(std::vector<Matrix>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1));
}

std::optional<MatrixSeries> MatrixSeries::inverse(double rcond_floor) const {
  const Eigen::VectorXd rows = c_[0].rowwise().norm();
  if (!(rows.minCoeff() > 0.0) || !rows.allFinite()) return std::nullopt;
  const Eigen::VectorXd inv_rows = rows.cwiseInverse();
  const Eigen::PartialPivLU<Matrix> lu(inv_rows.cast<cplx>().asDiagonal() * c_[0]);
  if (!(lu.rcond() > rcond_floor)) return std::nullopt;
  const Matrix a0inv = lu.inverse() * inv_rows.cast<cplx>().asDiagonal();
  std::vector<Matrix> b;
  b.push_back(a0inv);
  for (int p = 1; p <= order(); ++p) {
    Matrix acc = Matrix::Zero(c_[0].rows(), c_[0].cols());
    for (int q = 1; q <= p; ++q) acc += c_[q] * b[p - q];
    b.push_back(-a0inv * acc);
  }
  return MatrixSeries(std::move(b));
}

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Matrix> c;
  for (int p = 0; p <= order; ++p) c.push_back(a.c_[p] + b.c_[p]);
  return MatrixSeries(std::move(c));
}

MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Matrix> c;
  for (int p = 0; p <= order; ++p) c.push_back(a.c_[p] - b.c_[p]);
  return MatrixSeries(std::move(c));
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Matrix> c;
  for (int p = 0; p <= order; ++p) {
    Matrix acc = Matrix::Zero(a.c_[0].rows(), b.c_[0].cols());
    for (int q = 0; q <= p; ++q) acc += a.c_[q] * b.c_[p - q];
    c.push_back(std::move(acc));
  }
  return MatrixSeries(std::move(c));
}

StepwiseSample StepwiseChain::at(double r, const SolutionVector* psi, int solution_order) const {
  if (!(r > 0.0)) throw DomainError("stepwise: r must be positive");
  const std::size_t n = chain_.n();
  const std::size_t total = chain_.size();
  const int extra = psi ? std::max(solution_order, 1) : 1;
  const int order = static_cast<int>(total) + extra;
  if (order > kMaxDerivativeOrder) throw CapabilityError("stepwise: chain too long for the series order");

  std::vector<MatrixSeries> pending;
  pending.reserve(total);
  for (const auto& u : chain_.links()) pending.push_back(MatrixSeries::of(u, r, order));
  std::optional<MatrixSeries> phi;
  if (psi) {
    if (psi->size() != n) throw ArgumentError("stepwise: psi must have n components");
    phi = MatrixSeries::of(*psi, r, order);
  }

  StepwiseSample out;
  const auto nn = static_cast<Eigen::Index>(n);
  MatrixSeries F = MatrixSeries::zero(nn, nn, order);
  for (std::size_t k = 0; k < total; ++k) {
    const MatrixSeries& y = pending[k];
    out.intermediate.push_back(y.derivative(0));
    out.intermediate_derivative.push_back(y.derivative(1));
    const auto y_inv = y.inverse();
    if (!y_inv) return out;
    const MatrixSeries w = y.differentiated() * *y_inv;
    F = F + w;
    const bool singular = chain_.link(k).is_singular();
    auto step = [&](const MatrixSeries& x) {
      const MatrixSeries lead = singular ? x.dm_applied(chain_.m()) : x.differentiated();
      return lead - w * x;
    };
    for (std::size_t l = k + 1; l < total; ++l) pending[l] = step(pending[l]);
    if (phi) phi = step(*phi);
  }

  out.available = true;
  out.F = F.derivative(0);
  out.dF = F.derivative(1);
  out.potential = chain_.background_value(r).cast<cplx>() - 2.0 * out.dF;
  if (phi) {
    const int have = std::min(solution_order, phi->order());
    out.solution.resize(nn, have + 1);
    for (int p = 0; p <= have; ++p) out.solution.col(p) = phi->derivative(p);
  }
  return out;
}

PotentialTable StepwiseChain::potential(const RadialGrid& grid) const {
  const std::size_t count = grid.size();
  PotentialTable table;
  table.grid = grid.radii();
  table.values.resize(count);
  table.F.resize(count);
  table.imaginary_residue.resize(count);
  table.pole.resize(count);
  table.ill_conditioned.assign(count, false);
  std::vector<StepwiseSample> samples(count);
  parallel_for(count, [&](std::size_t i) { samples[i] = at(grid[i]); });
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<Eigen::Index>(chain_.n());
    if (!samples[i].available) {
      table.values[i] = Matrix::Constant(n, n, cplx(nan, nan));
      table.F[i] = table.values[i];
      table.pole[i] = true;
      continue;
    }
    table.values[i] = samples[i].potential;
    table.F[i] = samples[i].F;
    const double scale = table.values[i].cwiseAbs().maxCoeff();
    table.imaginary_residue[i] = scale == 0.0 ? 0.0 : table.values[i].imag().cwiseAbs().maxCoeff() / scale;
  }
  return table;
}

}  // namespace darboux
