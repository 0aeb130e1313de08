#pragma once

// Two-channel (3S1-3D1) neutron-proton chain: two singular links acting on
// the s channel followed by a conjugate pair of regular links, its S-matrix
// in closed form, and the central/tensor/spin-orbit split of the potential.
// Units: hbar^2/2mu = 1, lengths in fm, wavenumbers in fm^-1.

#include <Eigen/Dense>

#include <vector>

#include "darboux/chain.hpp"
#include "darboux/transform.hpp"

namespace darboux {

struct KvGParameters {
  double k1 = 0.944;
  double k2 = 0.232;
  double chi = 1.22;

  /// Throws ArgumentError unless all are positive, finite and k1 != k2.
  void validate() const;
  cplx kappa() const { return {chi, chi}; }
};

/// N(k) = 1 / ((k1 - i k)(k2 - i k)).
cplx kvg_normalization(const KvGParameters& p, cplx k);

/// Background diag(0, 6/r^2): channel 0 is s, channel 1 is d.
std::vector<ChannelPotential> kvg_background();

/// U1 = diag(phi_s(i k1 r), 1), U2 = diag(f_s(-i k2 r), 1), then
///   U3 = [[-phi_s(kr) N(-k), i f_s(kr) N(k)], [-i phi_d(kr), f_d(kr)]]
/// at k = kappa, and U4 = conj(U3).
ChainSpec build_kvg_chain(const KvGParameters& p);

/// Without the N(+-k) factors in U3 (and U4); the links lose their zero
/// self-Wronskian.
ChainSpec build_kvg_chain_unnormalized(const KvGParameters& p);

/// W[Y, Y] = Y^T Y' - (Y')^T Y.
Matrix self_wronskian(const Matrix& y, const Matrix& dy);

/// After the chain the channels swap: asymptotically channel 0 carries the
/// d-wave barrier 6/r^2 and channel 1 is free. This is that limit.
Eigen::Matrix2d kvg_asymptotic_background(double r);

struct SMatrixValue {
  double k = 0.0;
  Eigen::Matrix2cd S;
  /// Blatt-Biedenharn parametrization S = O(eps) diag(e^{2i d1}, e^{2i d2}) O(eps)^T,
  /// |eps| <= pi/4, eigenphases in (-pi/2, pi/2].
  double delta1 = 0.0;
  double delta2 = 0.0;
  double mixing = 0.0;
};

/// Eigenphases and mixing of a symmetric unitary 2x2 matrix.
SMatrixValue analyze_smatrix(double k, const Eigen::Matrix2cd& s);

/// Closed-form S for complex k (meromorphic; poles at k = i k1, i k2).
/// Rows and columns follow the closed-form ordering; see `kvg_smatrix_channels`.
Eigen::Matrix2cd closed_form_smatrix_at(const KvGParameters& p, cplx k);
SMatrixValue closed_form_smatrix(const KvGParameters& p, double k);

/// A_d / A_s = k2^2 / (2 chi^2).
double eta_ratio(const KvGParameters& p);

struct ResidueRatio {
  double eta = 0.0;
  Eigen::Matrix2cd residue;
};

/// res S_21 / res S_11 at k = i k2 by trapezoidal contour integration on a
/// circle of radius `radius_fraction * k2`.
ResidueRatio eta_from_residues(const KvGParameters& p, double radius_fraction = 1e-3, int nodes = 64);

/// Central, tensor and spin-orbit parts of a 2x2 potential:
///   V_C = V_22, V_T = V_12 / sqrt 8, V_O = (V_22 - V_12/sqrt 2 - V_11 + 6/r^2) / 3.
struct PotentialDecomposition {
  std::vector<double> r;
  std::vector<double> central;
  std::vector<double> tensor;
  std::vector<double> spin_orbit;
  std::vector<bool> pole;

  /// Inverse map: (V_11, V_12, V_22) at sample i.
  Eigen::Matrix2d reconstruct(std::size_t i) const;
};

PotentialDecomposition decompose_potential(const PotentialTable& table);

}  // namespace darboux
