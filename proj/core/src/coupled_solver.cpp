#include "darboux/coupled_solver.hpp"

#include <boost/math/interpolators/makima.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace darboux {

namespace {

using State = std::vector<double>;

double factorial(int n) {
  double f = 1.0;
  for (int q = 2; q <= n; ++q) f *= q;
  return f;
}

// h^+_l(x) = e^{ix} sum_m c_m x^{-m}.
std::vector<cplx> hankel_coefficients(int l) {
  std::vector<cplx> c;
  const cplx phase = std::pow(kI, -l);
  for (int m = 0; m <= l; ++m)
    c.push_back(phase * factorial(l + m) / (factorial(m) * factorial(l - m)) * std::pow(kI / 2.0, m));
  return c;
}

void check_inputs(double k, const std::vector<int>& ls) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("numerical_smatrix: k must be positive");
  if (ls.empty()) throw ArgumentError("numerical_smatrix: l_per_channel is empty");
  for (int l : ls)
    if (l < 0 || l > 10) throw ArgumentError("numerical_smatrix: l out of range");
}

}  // namespace

cplx riccati_hankel(int l, double x) {
  const auto c = hankel_coefficients(l);
  cplx sum{};
  for (int m = 0; m <= l; ++m) sum += c[m] * std::pow(x, -m);
  return std::exp(kI * x) * sum;
}

cplx riccati_hankel_derivative(int l, double x) {
  const auto c = hankel_coefficients(l);
  cplx sum{};
  for (int m = 0; m <= l; ++m) sum += c[m] * (kI * std::pow(x, -m) - static_cast<double>(m) * std::pow(x, -m - 1));
  return std::exp(kI * x) * sum;
}

Eigen::MatrixXcd numerical_smatrix(const PotentialFunction& v, double k, const std::vector<int>& l_per_channel,
                                   const CoupledSolverOptions& opts) {
  check_inputs(k, l_per_channel);
  const auto n = static_cast<Eigen::Index>(l_per_channel.size());
  const double r0 = opts.r_min;
  const double r1 = opts.r_max;
  if (!(r0 > 0.0) || !(r1 > r0)) throw ArgumentError("numerical_smatrix: need 0 < r_min < r_max");

  const Eigen::MatrixXd v_end = v(r1);
  if (v_end.rows() != n || v_end.cols() != n) throw ArgumentError("numerical_smatrix: potential size mismatch");
  double tail = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const int l = l_per_channel[i];
      const double expected = i == j ? l * (l + 1) / (r1 * r1) : 0.0;
      tail = std::max(tail, std::abs(v_end(i, j) - expected));
    }
  if (!(tail <= opts.tail_tolerance))
    throw NumericalError("numerical_smatrix: potential tail " + std::to_string(tail) + " at r_max = " +
                         std::to_string(r1) + " does not match the centrifugal background");

  // Regular start from the leading r^{-2} behaviour.
  const Eigen::MatrixXd lead = r0 * r0 * v(r0);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (lead + lead.transpose()));
  Eigen::MatrixXd phi(n, n);
  Eigen::MatrixXd dphi(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const double lam = std::max(eig.eigenvalues()(c), -0.25);
    const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * lam));
    phi.col(c) = eig.eigenvectors().col(c) * std::pow(r0, s + 1.0);
    dphi.col(c) = eig.eigenvectors().col(c) * (s + 1.0) * std::pow(r0, s);
  }

  const auto nn = static_cast<std::size_t>(n * n);
  State y(2 * nn);
  auto pack = [&] {
    Eigen::Map<Eigen::MatrixXd>(y.data(), n, n) = phi;
    Eigen::Map<Eigen::MatrixXd>(y.data() + nn, n, n) = dphi;
  };
  auto unpack = [&] {
    phi = Eigen::Map<const Eigen::MatrixXd>(y.data(), n, n);
    dphi = Eigen::Map<const Eigen::MatrixXd>(y.data() + nn, n, n);
  };
  const double k2 = k * k;
  auto rhs = [&](const State& x, State& dxdr, double r) {
    const Eigen::Map<const Eigen::MatrixXd> p(x.data(), n, n);
    const Eigen::Map<const Eigen::MatrixXd> dp(x.data() + nn, n, n);
    Eigen::Map<Eigen::MatrixXd>(dxdr.data(), n, n) = dp;
    Eigen::MatrixXd vr = v(r);
    vr.diagonal().array() -= k2;
    Eigen::Map<Eigen::MatrixXd>(dxdr.data() + nn, n, n) = vr * p;
  };

  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(opts.absolute_tolerance, opts.relative_tolerance,
                                      ode::runge_kutta_dopri5<State>());
  pack();
  double r = r0;
  while (r < r1) {
    // Segments grow geometrically near the origin.
    const double next = std::min(r1, r + std::min(opts.segment, std::max(r, 1e-3)));
    const double h0 = 1e-2 * (next - r);
    ode::integrate_adaptive(stepper, rhs, y, r, next, h0);
    r = next;
    unpack();
    if (!phi.allFinite() || !dphi.allFinite())
      throw NumericalError("numerical_smatrix: integration blew up near r = " + std::to_string(r));
    Eigen::MatrixXd stacked(2 * n, n);
    stacked << phi, dphi;
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(stacked);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(2 * n, n);
    phi = q.topRows(n);
    dphi = q.bottomRows(n);
    pack();
  }

  Eigen::MatrixXcd system(2 * n, 2 * n);
  system.setZero();
  for (Eigen::Index i = 0; i < n; ++i) {
    const int l = l_per_channel[i];
    const cplx hp = riccati_hankel(l, k * r1);
    const cplx dhp = k * riccati_hankel_derivative(l, k * r1);
    system(i, i) = std::conj(hp);
    system(n + i, i) = std::conj(dhp);
    system(i, n + i) = -hp;
    system(n + i, n + i) = -dhp;
  }
  Eigen::MatrixXcd rhs_values(2 * n, n);
  rhs_values << phi.cast<cplx>(), dphi.cast<cplx>();
  const Eigen::MatrixXcd cd = system.partialPivLu().solve(rhs_values);
  const Eigen::MatrixXcd c = cd.topRows(n);
  const Eigen::MatrixXcd d = cd.bottomRows(n);
  return d * c.inverse();
}

PotentialFunction interpolate_potential(const PotentialTable& table) {
  const std::size_t count = table.size();
  const auto n = static_cast<Eigen::Index>(table.channels());
  if (count < 4) throw ArgumentError("interpolate_potential: need at least 4 samples");
  using Makima = boost::math::interpolators::makima<std::vector<double>>;
  auto splines = std::make_shared<std::vector<Makima>>();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::vector<double> x(table.grid);
      std::vector<double> y(count);
      for (std::size_t s = 0; s < count; ++s) {
        if (table.pole[s]) throw DomainError("interpolate_potential: table has a pole");
        y[s] = table.grid[s] * table.grid[s] * table.values[s](i, j).real();
      }
      splines->emplace_back(std::move(x), std::move(y));
    }
  }
  const double lo = table.grid.front();
  const double hi = table.grid.back();
  return [splines, n, lo, hi](double r) {
    if (r < lo * (1 - 1e-12) || r > hi * (1 + 1e-12)) throw DomainError("interpolated potential: r outside the table");
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out(i, j) = (*splines)[static_cast<std::size_t>(i * n + j)](r) / (r * r);
    return out;
  };
}

Eigen::MatrixXcd numerical_smatrix(const PotentialTable& table, double k, const std::vector<int>& l_per_channel,
                                   CoupledSolverOptions opts) {
  if (table.size() == 0) throw ArgumentError("numerical_smatrix: empty table");
  if (table.channels() != l_per_channel.size()) throw ArgumentError("numerical_smatrix: channel count mismatch");
  opts.r_min = std::max(opts.r_min, table.grid.front());
  if (opts.r_max == 0.0 || opts.r_max > table.grid.back()) opts.r_max = table.grid.back();
  return numerical_smatrix(interpolate_potential(table), k, l_per_channel, opts);
}

}  // namespace darboux
