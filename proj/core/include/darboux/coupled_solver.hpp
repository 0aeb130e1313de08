#pragma once

// S-matrix of -Phi'' + V(r) Phi = k^2 Phi by direct integration, independent
// of the transformation machinery. V includes the centrifugal terms; at
// r_max it must reduce to diag(l_i (l_i + 1) / r^2).

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/transform.hpp"

namespace darboux {

using PotentialFunction = std::function<Eigen::MatrixXd(double r)>;

struct CoupledSolverOptions {
  double r_min = 1e-3;
  /// Matching radius; 0 means the last grid point (table overload only).
  double r_max = 0.0;
  double absolute_tolerance = 1e-12;
  double relative_tolerance = 1e-11;
  /// Columns are re-orthonormalized after every segment of this length.
  double segment = 0.5;
  /// Allowed max |V - centrifugal| at r_max.
  double tail_tolerance = 1e-6;
};

/// Riccati-Hankel h^+_l(x) = i^{-l} e^{ix} sum_m (l+m)! / (m! (l-m)!) (i / 2x)^m
/// and its x-derivative.
cplx riccati_hankel(int l, double x);
cplx riccati_hankel_derivative(int l, double x);

/// Regular solutions start from the eigenvectors of r^2 V(r_min) with the
/// matching powers r^{s+1}, s(s+1) = eigenvalue. They are matched at r_max
/// to Phi = H^- C - H^+ D, and S = D C^{-1}.
Eigen::MatrixXcd numerical_smatrix(const PotentialFunction& v, double k, const std::vector<int>& l_per_channel,
                                   const CoupledSolverOptions& opts);

/// Same, with r^2 V interpolated (modified Akima) between table samples.
/// The table must be pole-free on [r_min, r_max].
Eigen::MatrixXcd numerical_smatrix(const PotentialTable& table, double k, const std::vector<int>& l_per_channel,
                                   CoupledSolverOptions opts = {});

/// Interpolated potential built from a table (exposed for diagnostics).
PotentialFunction interpolate_potential(const PotentialTable& table);

}  // namespace darboux
