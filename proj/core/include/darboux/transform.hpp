#pragma once

// Transformed solutions and potentials from determinant ratios of the block
// assemblies:
//
//   phi_j    = |W_j(U_1..U_N, Psi)| / |W(U_1..U_N)|
//   f^N_ij   = |W_ij(U_1..U_N)| / |W(U_1..U_N)|
//   V_N      = V_0 - 2 dF_N/dr
//
// Ratios are formed from row-equilibrated determinants by subtracting log
// scales, so entries growing like exp(N k r) do not overflow.

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "darboux/assembly.hpp"
#include "darboux/chain.hpp"
#include "darboux/grid.hpp"

namespace darboux {

/// Value with a flag set when |W(r)| is zero or not finite (a pole of the
/// transformed potential). `ill_conditioned` reports a small |W| relative to
/// the product of its row norms; the value is still returned.
template <class T>
struct Flagged {
  T value;
  bool singular_point = false;
  bool ill_conditioned = false;
};

/// phi = L_{N<-0} Psi at r.
Flagged<Vector> transform_solution(const ChainSpec& chain, const SolutionVector& psi, double r);

/// Derivatives 0..order of phi at r (column p holds d^p phi / dr^p), from
/// determinants of Taylor-series assemblies.
/// `base` carries the input jitter settings; its series order is replaced.
Flagged<Matrix> transform_solution_derivatives(const ChainSpec& chain, const SolutionVector& psi, double r,
                                               int order, const AssemblyOptions& base = {});

/// L_{N<-0} applied to each column of u.
Flagged<Matrix> transform_matrix(const ChainSpec& chain, const TransformationMatrix& u, double r);

/// d phi_j / dr by the ratio-differentiation rule
///   (Gamma_j - sum_l phi_l |W_{j,l}|) / |W|,
/// where Gamma_j is |W_j| with its last row differentiated.
Flagged<cplx> ratio_derivative(const ChainSpec& chain, const SolutionVector& psi, std::size_t j, double r);

/// F_N(r) from the W_ij / W ratios.
Flagged<Matrix> compute_F(const ChainSpec& chain, double r);

/// F_N and its first `order` derivatives (element p is d^p F / dr^p).
Flagged<std::vector<Matrix>> compute_F_derivatives(const ChainSpec& chain, double r, int order,
                                                   const AssemblyOptions& base = {});

enum class DerivativeScheme {
  /// dF from Taylor-series determinants (exact up to rounding).
  analytic,
  /// Central differences of compute_F with one Richardson level.
  richardson,
};

struct PotentialOptions {
  DerivativeScheme scheme = DerivativeScheme::analytic;
  /// Allowed max |Im V| / max |V| at non-pole samples.
  double imaginary_tolerance = 1e-8;
  /// Throw NumericalError when the imaginary residue exceeds the tolerance.
  bool require_real = true;
  /// Input perturbation for sensitivity probes (see AssemblyOptions).
  double jitter = 0.0;
  std::uint64_t jitter_seed = 0;
};

struct PotentialSample {
  Matrix value;  // complex V_N(r)
  Matrix F;
  double imaginary_residue = 0.0;  // max|Im V| / max|V|
  bool pole = false;
  bool ill_conditioned = false;
};

PotentialSample potential_at(const ChainSpec& chain, double r, const PotentialOptions& opts = {});

/// Sampled potential over a radial grid.
struct PotentialTable {
  std::vector<double> grid;
  std::vector<Matrix> values;
  std::vector<Matrix> F;
  std::vector<double> imaginary_residue;
  std::vector<bool> pole;
  std::vector<bool> ill_conditioned;
  /// Midpoints of grid intervals across which |W| changes sign.
  std::vector<double> sign_change_radii;

  std::size_t size() const { return grid.size(); }
  std::size_t channels() const { return values.empty() ? 0 : static_cast<std::size_t>(values.front().rows()); }
  Eigen::MatrixXd real_value(std::size_t i) const { return values[i].real(); }
};

PotentialTable compute_potential(const ChainSpec& chain, const RadialGrid& grid, const PotentialOptions& opts = {});

/// Largest change of V (or of the solution derivatives 0..2) per unit
/// relative perturbation of the basis values, over two jitter seeds.
/// Multiplied by the unit roundoff it estimates the error that rounding of
/// the inputs alone causes in double precision.
double potential_sensitivity(const ChainSpec& chain, double r, double jitter = 1e-10);
double solution_sensitivity(const ChainSpec& chain, const SolutionVector& psi, double r, double jitter = 1e-10);

/// |W(r)| in log form (pole diagnostics).
LogDeterminant wronskian_determinant(const ChainSpec& chain, double r);

}  // namespace darboux
