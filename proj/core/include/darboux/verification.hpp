#pragma once

// Self-checks shared by the acceptance test binary and `darboux verify`.
// Every check reports measured maxima next to their tolerances.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "darboux/chain.hpp"
#include "darboux/scattering.hpp"

namespace darboux {

struct Measurement {
  std::string label;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed() const { return value < tolerance; }
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  std::vector<Measurement> measurements;
  double seconds = 0.0;
  std::string detail;

  bool passed() const;
};

struct VerificationConfig {
  std::uint64_t seed = 0x5eedda4b0u;
  int chains = 24;
  int energies = 12;
  KvGParameters kvg;
  std::vector<double> k_points{0.1, 0.5, 1.0, 2.0};
  int smatrix_samples = 100;
  int sylvester_samples = 200;
  int row_replacement_samples = 100;
  /// Samples of the KvG potential table on [r_min, r_max].
  std::size_t kvg_points = 2000;
  double kvg_r_min = 1e-2;
  double kvg_r_max = 25.0;
};

struct RandomChainOptions {
  std::size_t singular_links = 1;
  std::size_t total_links = 2;
  double k_min = 0.3;
  double k_max = 1.5;
  double min_separation = 0.1;
};

/// n = 2, m = 1 chain with real coefficients and distinct real spectral
/// values -k^2: singular links diag(c cosh kr, 1), regular links with entries
/// drawn from cosh, sinh, e^{kr}, e^{-kr}.
ChainSpec random_chain(std::mt19937_64& rng, const RandomChainOptions& opts);

/// True when |W| keeps one sign and stays finite on `probe` radii.
bool pole_free(const ChainSpec& chain, const std::vector<double>& probe);

/// Converts a numerical S (chain channel order d, s; Riccati-Hankel phases)
/// to the ordering and phase convention of closed_form_smatrix_at.
Eigen::Matrix2cd kvg_to_closed_form_convention(const Eigen::Matrix2cd& numeric);

CheckResult check_oracle_equivalence(const VerificationConfig& cfg);      // 1
CheckResult check_schrodinger_residual(const VerificationConfig& cfg);    // 2
CheckResult check_eta(const VerificationConfig& cfg);                     // 3
CheckResult check_smatrix_structure(const VerificationConfig& cfg);       // 4
CheckResult check_end_to_end_smatrix(const VerificationConfig& cfg);      // 5
CheckResult check_kvg_symmetry(const VerificationConfig& cfg);            // 6
CheckResult check_determinant_identities(const VerificationConfig& cfg);  // 7
CheckResult check_short_range_tail(const VerificationConfig& cfg);        // 8

std::vector<CheckResult> run_all_checks(const VerificationConfig& cfg);

/// "[PASS] 3 eta ..." followed by one indented line per measurement.
std::string format_check(const CheckResult& check);

}  // namespace darboux
