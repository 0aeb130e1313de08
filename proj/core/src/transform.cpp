#include "darboux/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "darboux/parallel.hpp"

namespace darboux {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_zero(const LogDeterminant& d) { return d.phase == cplx{} || !std::isfinite(d.log_abs); }

cplx ratio(const LogDeterminant& num, const LogDeterminant& den) {
  if (is_zero(num)) return cplx{};
  return (num.phase / den.phase) * std::exp(num.log_abs - den.log_abs);
}

Taylor ratio(const ScaledDeterminant<Taylor>& num, const ScaledDeterminant<Taylor>& den) {
  return (num.mantissa / den.mantissa) * cplx(std::exp(num.log_scale - den.log_scale));
}

bool is_zero(const ScaledDeterminant<Taylor>& d) {
  return d.mantissa.value() == cplx{} || !std::isfinite(std::abs(d.mantissa.value())) || !std::isfinite(d.log_scale);
}

LogDeterminant det_W(const ChainSpec& chain, double r) { return log_determinant(build_W(chain, r).values()); }

SolutionVector column_of(const TransformationMatrix& u, std::size_t col) {
  SolutionVector psi;
  psi.reserve(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) psi.push_back(u.entry(i, col));
  return psi;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

double potential_sensitivity(const ChainSpec& chain, double r, double jitter) {
  PotentialOptions po;
  po.require_real = false;
  const Matrix v = potential_at(chain, r, po).value;
  double worst = 0.0;
  po.jitter = jitter;
  for (std::uint64_t seed : {0x1234ULL, 0xfeedULL}) {
    po.jitter_seed = seed;
    worst = std::max(worst, (potential_at(chain, r, po).value - v).norm() / jitter);
  }
  return worst;
}

double solution_sensitivity(const ChainSpec& chain, const SolutionVector& psi, double r, double jitter) {
  const Matrix phi = transform_solution_derivatives(chain, psi, r, 2).value;
  double worst = 0.0;
  AssemblyOptions base;
  base.jitter = jitter;
  for (std::uint64_t seed : {0x1234ULL, 0xfeedULL}) {
    base.jitter_seed = seed;
    worst = std::max(worst, (transform_solution_derivatives(chain, psi, r, 2, base).value - phi).norm() / jitter);
  }
  return worst;
}

LogDeterminant wronskian_determinant(const ChainSpec& chain, double r) {
  if (chain.size() == 0) return LogDeterminant{};
  return det_W(chain, r);
}

Flagged<Vector> transform_solution(const ChainSpec& chain, const SolutionVector& psi, double r) {
  const std::size_t n = chain.n();
  if (psi.size() != n) throw ArgumentError("transform_solution: psi must have n components");
  Vector out(n);
  if (chain.size() == 0) {
    if (!(r > 0.0)) throw DomainError("transform_solution: r must be positive");
    for (std::size_t j = 0; j < n; ++j) out(j) = psi[j].derivative(r, 0);
    return {out, false};
  }
  const auto w = det_W(chain, r);
  if (is_zero(w)) return {Vector::Constant(n, cplx(kNaN, kNaN)), true};
  for (std::size_t j = 0; j < n; ++j) out(j) = ratio(log_determinant(build_Wj(chain, psi, j, r).values()), w);
  return {out, false, w.ill_conditioned};
}

Flagged<Matrix> transform_solution_derivatives(const ChainSpec& chain, const SolutionVector& psi, double r,
                                               int order, const AssemblyOptions& base) {
  const std::size_t n = chain.n();
  if (psi.size() != n) throw ArgumentError("transform_solution_derivatives: psi must have n components");
  if (order < 0 || order > Taylor::kMaxOrder) throw CapabilityError("transform_solution_derivatives: bad order");
  Matrix out(n, order + 1);
  if (chain.size() == 0) {
    for (std::size_t j = 0; j < n; ++j)
      for (int p = 0; p <= order; ++p) out(j, p) = psi[j].derivative(r, p);
    return {out, false};
  }
  AssemblyOptions opts = base;
  opts.series_order = order;
  opts.last_row_extra = 0;
  const auto w = series_determinant(build_W(chain, r, opts).entries);
  if (is_zero(w)) return {Matrix::Constant(n, order + 1, cplx(kNaN, kNaN)), true};
  for (std::size_t j = 0; j < n; ++j) {
    const Taylor phi = ratio(series_determinant(build_Wj(chain, psi, j, r, opts).entries), w);
    for (int p = 0; p <= order; ++p) out(j, p) = phi.derivative(p);
  }
  return {out, false, w.ill_conditioned};
}

Flagged<Matrix> transform_matrix(const ChainSpec& chain, const TransformationMatrix& u, double r) {
  if (u.n() != chain.n()) throw ArgumentError("transform_matrix: dimension mismatch");
  Matrix out(u.n(), u.n());
  bool singular = false;
  bool ill = false;
  for (std::size_t c = 0; c < u.n(); ++c) {
    const auto col = transform_solution(chain, column_of(u, c), r);
    out.col(static_cast<Eigen::Index>(c)) = col.value;
    singular = singular || col.singular_point;
    ill = ill || col.ill_conditioned;
  }
  return {out, singular, ill};
}

Flagged<cplx> ratio_derivative(const ChainSpec& chain, const SolutionVector& psi, std::size_t j, double r) {
  const std::size_t n = chain.n();
  if (psi.size() != n) throw ArgumentError("ratio_derivative: psi must have n components");
  if (j >= n) throw ArgumentError("ratio_derivative: component index out of range");
  if (chain.size() == 0) return {psi[j].derivative(r, 1), false};
  const auto w = det_W(chain, r);
  if (is_zero(w)) return {cplx(kNaN, kNaN), true};
  const auto phi = transform_solution(chain, psi, r);
  const auto gamma = log_determinant(build_Wj(chain, psi, j, r, {0, 1}).values());
  cplx out = ratio(gamma, w);
  for (std::size_t l = 0; l < n; ++l)
    out -= phi.value(l) * ratio(log_determinant(build_Wij(chain, j, l, r).values()), w);
  return {out, false, w.ill_conditioned};
}

Flagged<Matrix> compute_F(const ChainSpec& chain, double r) {
  const std::size_t n = chain.n();
  if (chain.size() == 0) return {Matrix::Zero(n, n), false};
  const auto w = det_W(chain, r);
  if (is_zero(w)) return {Matrix::Constant(n, n, cplx(kNaN, kNaN)), true};
  Matrix f(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, j) = ratio(log_determinant(build_Wij(chain, i, j, r).values()), w);
  return {f, false, w.ill_conditioned};
}

Flagged<std::vector<Matrix>> compute_F_derivatives(const ChainSpec& chain, double r, int order,
                                                   const AssemblyOptions& base) {
  const std::size_t n = chain.n();
  if (order < 0 || order > Taylor::kMaxOrder) throw CapabilityError("compute_F_derivatives: bad order");
  std::vector<Matrix> out(static_cast<std::size_t>(order) + 1, Matrix::Zero(n, n));
  if (chain.size() == 0) return {out, false};
  AssemblyOptions opts = base;
  opts.series_order = order;
  opts.last_row_extra = 0;
  const auto w = series_determinant(build_W(chain, r, opts).entries);
  if (is_zero(w)) {
    for (auto& m : out) m.setConstant(cplx(kNaN, kNaN));
    return {out, true};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto wij = series_determinant(build_Wij(chain, i, j, r, opts).entries);
      const Taylor f = is_zero(wij) ? Taylor(order) : ratio(wij, w);
      for (int p = 0; p <= order; ++p) out[p](i, j) = f.derivative(p);
    }
  }
  return {out, false, w.ill_conditioned};
}

namespace {

Matrix richardson_derivative(const ChainSpec& chain, double r, bool& singular) {
  double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, r);
  while (r - h <= 0.0) h *= 0.25;
  auto central = [&](double step) {
    const auto plus = compute_F(chain, r + step);
    const auto minus = compute_F(chain, r - step);
    singular = singular || plus.singular_point || minus.singular_point;
    return Matrix((plus.value - minus.value) / (2.0 * step));
  };
  const Matrix coarse = central(h);
  const Matrix fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

PotentialSample potential_at(const ChainSpec& chain, double r, const PotentialOptions& opts) {
  if (!(r > 0.0)) throw DomainError("potential_at: r must be positive");
  PotentialSample out;
  Matrix dF;
  if (opts.scheme == DerivativeScheme::analytic) {
    AssemblyOptions base;
    base.jitter = opts.jitter;
    base.jitter_seed = opts.jitter_seed;
    auto f = compute_F_derivatives(chain, r, 1, base);
    out.F = f.value[0];
    dF = f.value[1];
    out.pole = f.singular_point;
    out.ill_conditioned = f.ill_conditioned;
  } else {
    const auto f = compute_F(chain, r);
    out.F = f.value;
    out.pole = f.singular_point;
    out.ill_conditioned = f.ill_conditioned;
    dF = richardson_derivative(chain, r, out.pole);
  }
  out.value = chain.background_value(r).cast<cplx>() - 2.0 * dF;
  const double scale = max_abs(out.value);
  out.imaginary_residue = scale == 0.0 ? 0.0 : out.value.imag().cwiseAbs().maxCoeff() / scale;
  if (!std::isfinite(scale)) out.pole = true;
  return out;
}

PotentialTable compute_potential(const ChainSpec& chain, const RadialGrid& grid, const PotentialOptions& opts) {
  const std::size_t count = grid.size();
  PotentialTable table;
  table.grid = grid.radii();
  table.values.resize(count);
  table.F.resize(count);
  table.imaginary_residue.resize(count);
  table.pole.resize(count);
  table.ill_conditioned.resize(count);
  std::vector<LogDeterminant> dets(count);

  std::vector<PotentialSample> samples(count);
  parallel_for(count, [&](std::size_t i) {
    samples[i] = potential_at(chain, grid[i], opts);
    dets[i] = wronskian_determinant(chain, grid[i]);
  });

  for (std::size_t i = 0; i < count; ++i) {
    table.values[i] = std::move(samples[i].value);
    table.F[i] = std::move(samples[i].F);
    table.imaginary_residue[i] = samples[i].imaginary_residue;
    table.pole[i] = samples[i].pole;
    table.ill_conditioned[i] = samples[i].ill_conditioned;
  }
  // |W| is real for conjugate-paired chains; a sign flip brackets a pole.
  for (std::size_t i = 1; i < count; ++i) {
    const cplx a = dets[i - 1].phase;
    const cplx b = dets[i].phase;
    const bool real_a = std::abs(a.imag()) < 1e-6;
    const bool real_b = std::abs(b.imag()) < 1e-6;
    if (real_a && real_b && a.real() * b.real() < 0.0) {
      table.sign_change_radii.push_back(0.5 * (grid[i - 1] + grid[i]));
      table.pole[i - 1] = true;
      table.pole[i] = true;
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (opts.require_real && !table.pole[i] && table.imaginary_residue[i] > opts.imaginary_tolerance)
      throw NumericalError("potential has an imaginary part " + std::to_string(table.imaginary_residue[i]) +
                           " (relative) at r = " + std::to_string(grid[i]));
  }
  return table;
}

}  // namespace darboux
