#include "darboux/scattering.hpp"

#include <cmath>
#include <numbers>

namespace darboux {

namespace {

using K = BasisSolution::Kind;

ScaledBasis scaled(cplx c, K kind, cplx k, const ChannelPotential& channel) {
  return ScaledBasis{c, make_basis(kind, k, channel)};
}

ChainSpec kvg_chain(const KvGParameters& p, bool normalized) {
  p.validate();
  const auto s = ChannelPotential::free();
  const auto d = ChannelPotential::centrifugal(2);
  const cplx kappa = p.kappa();
  const cplx n_minus = normalized ? kvg_normalization(p, -kappa) : cplx(1.0);
  const cplx n_plus = normalized ? kvg_normalization(p, kappa) : cplx(1.0);

  auto u1 = TransformationMatrix::singular(2, 1, {scaled(1.0, K::regular_s, kI * p.k1, s)});
  auto u2 = TransformationMatrix::singular(2, 1, {scaled(1.0, K::jost_s, -kI * p.k2, s)});
  auto u3 = TransformationMatrix::regular(2, {scaled(-n_minus, K::regular_s, kappa, s),
                                              scaled(kI * n_plus, K::jost_s, kappa, s),
                                              scaled(-kI, K::regular_d, kappa, d),
                                              scaled(1.0, K::jost_d, kappa, d)});
  auto u4 = u3.conjugated();
  return ChainSpec(2, 1, kvg_background(), {u1, u2, u3, u4});
}

}  // namespace

void KvGParameters::validate() const {
  for (double v : {k1, k2, chi})
    if (!(v > 0.0) || !std::isfinite(v)) throw ArgumentError("KvG parameters must be positive and finite");
  if (k1 == k2) throw ArgumentError("KvG parameters: k1 and k2 must differ");
}

cplx kvg_normalization(const KvGParameters& p, cplx k) { return 1.0 / ((p.k1 - kI * k) * (p.k2 - kI * k)); }

std::vector<ChannelPotential> kvg_background() {
  return {ChannelPotential::free(), ChannelPotential::centrifugal(2)};
}

ChainSpec build_kvg_chain(const KvGParameters& p) { return kvg_chain(p, true); }

ChainSpec build_kvg_chain_unnormalized(const KvGParameters& p) { return kvg_chain(p, false); }

Matrix self_wronskian(const Matrix& y, const Matrix& dy) {
  return y.transpose() * dy - dy.transpose() * y;
}

Eigen::Matrix2d kvg_asymptotic_background(double r) {
  Eigen::Matrix2d v = Eigen::Matrix2d::Zero();
  v(0, 0) = 6.0 / (r * r);
  return v;
}

SMatrixValue analyze_smatrix(double k, const Eigen::Matrix2cd& s) {
  SMatrixValue out;
  out.k = k;
  out.S = s;
  // S_11 - S_22 = cos(2 eps) w, 2 S_12 = sin(2 eps) w with w = e1 - e2.
  const cplx a = s(0, 0) - s(1, 1);
  const cplx b = s(0, 1) + s(1, 0);
  const cplx lead = std::abs(a) >= std::abs(b) ? a : b;
  double two_eps = 0.0;
  if (std::abs(lead) > 1e-14) {
    const cplx unit = lead / std::abs(lead);
    two_eps = std::atan2((b / unit).real(), (a / unit).real());
  }
  double eps = 0.5 * two_eps;
  if (eps > std::numbers::pi / 4) eps -= std::numbers::pi / 2;
  if (eps <= -std::numbers::pi / 4) eps += std::numbers::pi / 2;
  const double c = std::cos(eps);
  const double sn = std::sin(eps);
  Eigen::Matrix2cd o;
  o << c, -sn, sn, c;
  const Eigen::Matrix2cd diag = o.transpose() * s * o;
  out.mixing = eps;
  auto half_arg = [](cplx e) {
    double d = 0.5 * std::arg(e);
    if (d <= -std::numbers::pi / 2) d += std::numbers::pi;
    return d;
  };
  out.delta1 = half_arg(diag(0, 0));
  out.delta2 = half_arg(diag(1, 1));
  return out;
}

Eigen::Matrix2cd closed_form_smatrix_at(const KvGParameters& p, cplx k) {
  p.validate();
  const double two_chi2 = 2.0 * p.chi * p.chi;
  const cplx k2 = k * k;
  Eigen::Matrix2cd left;
  left << two_chi2, k2, -k2, two_chi2;
  const cplx phase = (k + kI * p.k1) * (k + kI * p.k2) / ((k - kI * p.k1) * (k - kI * p.k2));
  Eigen::Matrix2cd middle = Eigen::Matrix2cd::Identity();
  middle(0, 0) = phase;
  return left * middle * left.transpose() / (k2 * k2 + two_chi2 * two_chi2);
}

SMatrixValue closed_form_smatrix(const KvGParameters& p, double k) {
  if (!(k > 0.0)) throw DomainError("closed_form_smatrix: k must be positive");
  return analyze_smatrix(k, closed_form_smatrix_at(p, k));
}

double eta_ratio(const KvGParameters& p) {
  p.validate();
  return p.k2 * p.k2 / (2.0 * p.chi * p.chi);
}

ResidueRatio eta_from_residues(const KvGParameters& p, double radius_fraction, int nodes) {
  p.validate();
  if (!(radius_fraction > 0.0) || nodes < 4) throw ArgumentError("eta_from_residues: bad contour");
  const cplx pole = kI * p.k2;
  const double radius = radius_fraction * p.k2;
  // res f = (1 / 2 pi i) \oint f dk = mean over the circle of f(k) (k - pole).
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (int q = 0; q < nodes; ++q) {
    const cplx offset = std::polar(radius, 2.0 * std::numbers::pi * q / nodes);
    sum += closed_form_smatrix_at(p, pole + offset) * offset;
  }
  ResidueRatio out;
  out.residue = sum / static_cast<double>(nodes);
  out.eta = (out.residue(1, 0) / out.residue(0, 0)).real();
  return out;
}

Eigen::Matrix2d PotentialDecomposition::reconstruct(std::size_t i) const {
  const double v22 = central[i];
  const double v12 = std::sqrt(8.0) * tensor[i];
  const double v11 = v22 - v12 / std::sqrt(2.0) - 3.0 * spin_orbit[i] + 6.0 / (r[i] * r[i]);
  Eigen::Matrix2d v;
  v << v11, v12, v12, v22;
  return v;
}

PotentialDecomposition decompose_potential(const PotentialTable& table) {
  if (table.channels() != 2) throw ArgumentError("decompose_potential: needs a 2x2 potential table");
  PotentialDecomposition out;
  out.r = table.grid;
  out.pole = table.pole;
  const std::size_t count = table.size();
  out.central.resize(count);
  out.tensor.resize(count);
  out.spin_orbit.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = table.grid[i];
    const Eigen::MatrixXd v = table.real_value(i);
    out.central[i] = v(1, 1);
    out.tensor[i] = v(0, 1) / std::sqrt(8.0);
    out.spin_orbit[i] = (v(1, 1) - v(0, 1) / std::sqrt(2.0) - v(0, 0) + 6.0 / (r * r)) / 3.0;
  }
  return out;
}

}  // namespace darboux
