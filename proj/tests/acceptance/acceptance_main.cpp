// Acceptance checks 1-8. Prints one [PASS]/[FAIL] line per criterion with its
// measurements; exits nonzero if any selected criterion fails.
//
//   darboux_acceptance                 all criteria
//   darboux_acceptance --criterion 4   one criterion

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "darboux/verification.hpp"

int main(int argc, char** argv) {
  using namespace darboux;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: darboux_acceptance [--criterion 1..8]\n";
      return 2;
    }
  }
  if (only < 0 || only > 8) {
    std::cerr << "criterion must be in 1..8\n";
    return 2;
  }

  using Check = CheckResult (*)(const VerificationConfig&);
  const std::vector<Check> checks{check_oracle_equivalence,  check_schrodinger_residual, check_eta,
                                  check_smatrix_structure,   check_end_to_end_smatrix,   check_kvg_symmetry,
                                  check_determinant_identities, check_short_range_tail};
  const VerificationConfig cfg;
  bool all = true;
  for (int c = 1; c <= 8; ++c) {
    if (only != 0 && c != only) continue;
    CheckResult result;
    try {
      result = checks[c - 1](cfg);
    } catch (const std::exception& e) {
      result.criterion = c;
      result.name = "threw";
      result.measurements.push_back({"exception", 1.0, 0.0});
      result.detail = e.what();
    }
    std::cout << format_check(result) << std::flush;
    all = all && result.passed();
  }
  return all ? 0 : 1;
}
