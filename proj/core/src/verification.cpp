#include "darboux/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include "darboux/coupled_solver.hpp"
#include "darboux/detkit.hpp"
#include "darboux/parallel.hpp"
#include "darboux/stepwise.hpp"
#include "darboux/transform.hpp"

namespace darboux {

namespace {

using K = BasisSolution::Kind;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

constexpr double kEtaReference = 0.018081;
constexpr double kUnitRoundoff = 0x1.0p-53;
// Samples whose predicted rounding error exceeds this are not testable at 1e-6.
constexpr double kNoiseCeiling = 1e-7;
constexpr double kMaxExcludedFraction = 0.2;

double signed_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 1.5);
  return (rng() & 1u) ? mag(rng) : -mag(rng);
}

ScaledBasis hyperbolic_entry(std::mt19937_64& rng, double k) {
  const auto free = ChannelPotential::free();
  switch (static_cast<int>(rng() % 4u)) {
    case 0:
      return {signed_unit(rng), make_basis(K::cosh, k, free)};
    case 1:
      return {signed_unit(rng), make_basis(K::exp, k, free)};
    case 2:
      return {signed_unit(rng), make_basis(K::exp, -k, free)};
    default:
      return {signed_unit(rng), make_basis(K::sinh, k, free)};
  }
}

std::vector<double> linspace(double a, double b, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

struct ChainCase {
  ChainSpec chain;
  std::size_t singular;
  std::size_t total;
};

// (M, N) pairs with n = 2, m = 1 cycled through by the random sweeps.
constexpr std::pair<std::size_t, std::size_t> kShapes[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4},
                                                          {2, 2}, {2, 3}, {2, 4}};

// Every prefix must be pole-free (the stepwise route inverts each
// intermediate Y_k) and the potential must not vanish identically.
bool usable_for_oracle(const ChainSpec& chain, const std::vector<double>& probe) {
  for (std::size_t l = 1; l <= chain.size(); ++l)
    if (!pole_free(chain.prefix(l), probe)) return false;
  PotentialOptions po;
  po.require_real = false;
  double scale = 0.0;
  for (std::size_t i = 0; i < probe.size(); i += 10) scale = std::max(scale, potential_at(chain, probe[i], po).value.norm());
  return scale > 1e-3;
}

std::vector<ChainCase> sample_chains(const VerificationConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const auto probe = linspace(0.4, 8.5, 300);
  std::vector<ChainCase> out;
  for (int c = 0; c < cfg.chains; ++c) {
    const auto [m_links, n_links] = kShapes[static_cast<std::size_t>(c) % std::size(kShapes)];
    for (;;) {
      auto chain = random_chain(rng, {m_links, n_links});
      if (usable_for_oracle(chain, probe)) {
        out.push_back({std::move(chain), m_links, n_links});
        break;
      }
    }
  }
  return out;
}

SolutionVector free_solution(double energy, cplx c1, cplx c2) {
  const auto free = ChannelPotential::free();
  if (energy > 0.0) {
    const double k = std::sqrt(energy);
    return {{c1, make_basis(K::regular_s, k, free)}, {c2, make_basis(K::jost_s, k, free)}};
  }
  const double kappa = std::sqrt(-energy);
  return {{c1, make_basis(K::cosh, kappa, free)}, {c2, make_basis(K::sinh, kappa, free)}};
}

double relative(double diff, double scale) { return scale == 0.0 ? diff : diff / scale; }

PotentialTable kvg_table(const VerificationConfig& cfg) {
  return compute_potential(build_kvg_chain(cfg.kvg),
                           RadialGrid::logarithmic(cfg.kvg_r_min, cfg.kvg_r_max, cfg.kvg_points));
}

Matrix random_complex(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g;
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

ComplexMatrix to_dense(const Matrix& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

bool CheckResult::passed() const {
  return !measurements.empty() &&
         std::all_of(measurements.begin(), measurements.end(), [](const Measurement& m) { return m.passed(); });
}

ChainSpec random_chain(std::mt19937_64& rng, const RandomChainOptions& opts) {
  if (opts.singular_links > opts.total_links || opts.total_links == 0)
    throw ArgumentError("random_chain: need 0 <= M <= N and N >= 1");
  std::uniform_real_distribution<double> dist(opts.k_min, opts.k_max);
  std::vector<double> ks;
  while (ks.size() < opts.total_links) {
    const double k = dist(rng);
    if (std::all_of(ks.begin(), ks.end(), [&](double q) { return std::abs(q - k) >= opts.min_separation; }))
      ks.push_back(k);
  }
  std::vector<TransformationMatrix> links;
  for (std::size_t l = 0; l < opts.total_links; ++l) {
    if (l < opts.singular_links) {
      // A lone exponential here is a pure gauge (constant F), so use cosh.
      const ScaledBasis u{signed_unit(rng), make_basis(K::cosh, ks[l], ChannelPotential::free())};
      links.push_back(TransformationMatrix::singular(2, 1, {u}));
    } else {
      std::vector<ScaledBasis> e;
      for (int q = 0; q < 4; ++q) e.push_back(hyperbolic_entry(rng, ks[l]));
      links.push_back(TransformationMatrix::regular(2, std::move(e)));
    }
  }
  const auto free = ChannelPotential::free();
  return ChainSpec(2, 1, {free, free}, std::move(links));
}

bool pole_free(const ChainSpec& chain, const std::vector<double>& probe) {
  double sign = 0.0;
  for (double r : probe) {
    const auto d = wronskian_determinant(chain, r);
    if (!std::isfinite(d.log_abs) || d.phase == cplx{}) return false;
    const double s = d.phase.real() >= 0.0 ? 1.0 : -1.0;
    if (sign != 0.0 && s != sign) return false;
    sign = s;
  }
  return true;
}

Eigen::Matrix2cd kvg_to_closed_form_convention(const Eigen::Matrix2cd& numeric) {
  Eigen::Matrix2cd j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j * numeric * j.transpose();
}

CheckResult check_oracle_equivalence(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{1, "stepwise oracle vs determinant formulas", {}, 0.0, {}};
  const auto cases = sample_chains(cfg);
  const auto radii = linspace(0.5, 8.0, 31);
  struct Sample {
    double dv = 0.0, v = 0.0, v_noise = 0.0;
    double phi_rel = 0.0, phi_noise = 0.0;
    bool available = false;
  };
  std::vector<std::vector<Sample>> samples(cases.size(), std::vector<Sample>(radii.size()));
  parallel_for(cases.size(), [&](std::size_t c) {
    const auto& chain = cases[c].chain;
    std::mt19937_64 rng(cfg.seed + 17 * (c + 1));
    std::uniform_real_distribution<double> energy(0.05, 4.0);
    const auto psi = free_solution(energy(rng), signed_unit(rng), signed_unit(rng));
    const StepwiseChain oracle(chain);
    PotentialOptions po;
    po.require_real = false;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double r = radii[i];
      auto& s = samples[c][i];
      const auto step = oracle.at(r, &psi, 2);
      if (!step.available) continue;
      s.available = true;
      const auto det = potential_at(chain, r, po);
      const auto phi = transform_solution_derivatives(chain, psi, r, 2);
      s.dv = (step.potential - det.value).norm();
      s.v = det.value.norm();
      s.v_noise = kUnitRoundoff * potential_sensitivity(chain, r);
      s.phi_rel = relative((step.solution - phi.value).norm(), phi.value.norm());
      s.phi_noise = kUnitRoundoff * solution_sensitivity(chain, psi, r) / phi.value.norm();
    }
  });
  // V: sup-norm error over the interval relative to the sup-norm of V_det;
  // Phi: pointwise relative error. Samples whose inputs alone carry a
  // rounding error above a tenth of the tolerance are excluded.
  double worst_v = 0.0, worst_phi = 0.0, worst_excluded = 0.0;
  std::size_t excluded = 0, total = 0, unavailable = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    double scale = 0.0;
    for (const auto& s : samples[c]) scale = std::max(scale, s.v);
    for (const auto& s : samples[c]) {
      ++total;
      if (!s.available) {
        ++unavailable;
        continue;
      }
      const double v_rel = relative(s.dv, scale);
      if (relative(s.v_noise, scale) > kNoiseCeiling || s.phi_noise > kNoiseCeiling) {
        ++excluded;
        worst_excluded = std::max(worst_excluded, v_rel);
        continue;
      }
      worst_v = std::max(worst_v, v_rel);
      worst_phi = std::max(worst_phi, s.phi_rel);
    }
  }
  out.measurements.push_back({"max over chains of sup_r |V_step - V_det| / sup_r |V_det|", worst_v, 1e-6});
  out.measurements.push_back(
      {"max relative |Phi_step - Phi_det| / |Phi_det| (value, 1st, 2nd derivative)", worst_phi, 1e-6});
  out.measurements.push_back({"samples where the stepwise route was unavailable", static_cast<double>(unavailable), 1.0});
  out.measurements.push_back(
      {"fraction of samples excluded as ill-conditioned", static_cast<double>(excluded) / static_cast<double>(total),
       kMaxExcludedFraction});
  out.seconds = clock.seconds();
  out.measurements.push_back({"runtime (s)", out.seconds, 30.0});
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "; %zu of %zu samples excluded (input rounding alone > 1e-7), largest V discrepancy among them %.2e",
                excluded, total, worst_excluded);
  out.detail = std::to_string(cases.size()) + " chains, n = 2, m = 1, M in {1,2}, N in {1..4}, " +
               std::to_string(radii.size()) + " radii on [0.5, 8]" + buf;
  return out;
}

CheckResult check_schrodinger_residual(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{2, "Schrodinger residual of transformed solutions", {}, 0.0, {}};
  const auto cases = sample_chains(cfg);
  const auto radii = linspace(0.5, 8.0, 16);
  std::vector<double> worst(cases.size(), 0.0);
  std::vector<std::size_t> excluded(cases.size(), 0);
  parallel_for(cases.size(), [&](std::size_t c) {
    const auto& chain = cases[c].chain;
    std::mt19937_64 rng(cfg.seed + 31 * (c + 1));
    std::uniform_real_distribution<double> energy(0.05, 4.0);
    std::vector<double> energies;
    while (static_cast<int>(energies.size()) < cfg.energies) {
      const double e = (energies.size() % 2 == 0 ? 1.0 : -1.0) * energy(rng);
      bool clash = false;
      for (const auto& u : chain.links()) clash = clash || std::abs(u.spectral() - e) < 0.05;
      if (!clash) energies.push_back(e);
    }
    PotentialOptions po;
    po.require_real = false;
    std::vector<Matrix> potentials;
    std::vector<double> v_noise;
    for (double r : radii) {
      potentials.push_back(potential_at(chain, r, po).value);
      v_noise.push_back(kUnitRoundoff * potential_sensitivity(chain, r));
    }
    for (double e : energies) {
      const auto psi = free_solution(e, signed_unit(rng), signed_unit(rng));
      for (std::size_t i = 0; i < radii.size(); ++i) {
        const Matrix phi = transform_solution_derivatives(chain, psi, radii[i], 2).value;
        const double norm = (1.0 + std::abs(e)) * phi.col(0).norm();
        // First-order rounding estimate of the residual itself.
        const double phi_noise = kUnitRoundoff * solution_sensitivity(chain, psi, radii[i]);
        const double noise = (phi_noise * (1.0 + potentials[i].norm() + std::abs(e)) + v_noise[i] * phi.col(0).norm()) / norm;
        if (noise > kNoiseCeiling) {
          ++excluded[c];
          continue;
        }
        const Vector residual = -phi.col(2) + potentials[i] * phi.col(0) - e * phi.col(0);
        worst[c] = std::max(worst[c], residual.norm() / norm);
      }
    }
  });
  const std::size_t total = cases.size() * static_cast<std::size_t>(cfg.energies) * radii.size();
  const std::size_t skipped = std::accumulate(excluded.begin(), excluded.end(), std::size_t{0});
  out.measurements.push_back(
      {"max |-Phi'' + V Phi - E Phi| / ((1 + |E|) |Phi|)", *std::max_element(worst.begin(), worst.end()), 1e-6});
  out.measurements.push_back({"fraction of samples excluded as ill-conditioned",
                              static_cast<double>(skipped) / static_cast<double>(total), kMaxExcludedFraction});
  out.seconds = clock.seconds();
  out.detail = std::to_string(cases.size()) + " chains x " + std::to_string(cfg.energies) +
               " energies (half with E < 0) x " + std::to_string(radii.size()) + " radii; " +
               std::to_string(skipped) + " of " + std::to_string(total) + " samples excluded";
  return out;
}

CheckResult check_eta(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{3, "eta = A_d / A_s", {}, 0.0, {}};
  const double formula = eta_ratio(cfg.kvg);
  const auto residue = eta_from_residues(cfg.kvg);
  out.measurements.push_back({"|eta_formula - 0.018081|", std::abs(formula - kEtaReference), 1e-6});
  out.measurements.push_back({"|eta_residue - 0.018081|", std::abs(residue.eta - kEtaReference), 1e-5});
  char buf[128];
  std::snprintf(buf, sizeof buf, "eta_formula = %.9f, eta_residue = %.9f", formula, residue.eta);
  out.detail = buf;
  out.seconds = clock.seconds();
  return out;
}

CheckResult check_smatrix_structure(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{4, "closed-form S: unitarity, symmetry, k -> 0 limit", {}, 0.0, {}};
  std::mt19937_64 rng(cfg.seed + 4);
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  double unitarity = 0.0;
  double symmetry = 0.0;
  for (int s = 0; s < cfg.smatrix_samples; ++s) {
    double k = 0.0;
    while (k == 0.0) k = 5.0 - dist(rng);
    const Eigen::Matrix2cd m = closed_form_smatrix(cfg.kvg, k).S;
    unitarity = std::max(unitarity, (m * m.adjoint() - Eigen::Matrix2cd::Identity()).norm());
    symmetry = std::max(symmetry, (m - m.transpose()).norm());
  }
  const Eigen::Matrix2cd low = closed_form_smatrix(cfg.kvg, 1e-4).S;
  const double limit = (low - Eigen::Matrix2cd::Identity()).norm();
  out.measurements.push_back({"max |S S^+ - I|", unitarity, 1e-10});
  out.measurements.push_back({"max |S - S^T|", symmetry, 1e-10});
  out.measurements.push_back({"|S(1e-4) - I|", limit, 1e-6});
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d random k in (0, 5]; at small k, S_11 ~ 1 - 2ik(1/k1 + 1/k2), so |S(k) - I| ~ %.4g k",
                cfg.smatrix_samples, 2.0 * (1.0 / cfg.kvg.k1 + 1.0 / cfg.kvg.k2));
  out.detail = buf;
  out.seconds = clock.seconds();
  return out;
}

CheckResult check_end_to_end_smatrix(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{5, "ODE S-matrix of the constructed potential vs closed form", {}, 0.0, {}};
  const auto table = kvg_table(cfg);
  std::vector<double> errors(cfg.k_points.size());
  parallel_for(cfg.k_points.size(), [&](std::size_t i) {
    const double k = cfg.k_points[i];
    const Eigen::Matrix2cd numeric = numerical_smatrix(table, k, {2, 0});
    const Eigen::Matrix2cd closed = closed_form_smatrix_at(cfg.kvg, k);
    errors[i] = (kvg_to_closed_form_convention(numeric) - closed).cwiseAbs().maxCoeff();
  });
  out.measurements.push_back({"max entrywise |S_ode - S_closed|", *std::max_element(errors.begin(), errors.end()), 1e-3});
  out.seconds = clock.seconds();
  out.measurements.push_back({"runtime (s)", out.seconds, 60.0});
  std::ostringstream d;
  d << "k =";
  for (std::size_t i = 0; i < errors.size(); ++i) d << ' ' << cfg.k_points[i] << " (" << errors[i] << ')';
  d << "; l = (2, 0) after the channel swap";
  out.detail = d.str();
  return out;
}

CheckResult check_kvg_symmetry(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{6, "KvG potential symmetric and real; zero self-Wronskians", {}, 0.0, {}};
  PotentialOptions po;
  po.require_real = false;
  const auto chain = build_kvg_chain(cfg.kvg);
  const auto grid = RadialGrid::logarithmic(cfg.kvg_r_min, cfg.kvg_r_max, cfg.kvg_points);
  const auto table = compute_potential(chain, grid, po);
  double asym = 0.0;
  double imag = 0.0;
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.pole[i]) {
      ++flagged;
      continue;
    }
    const Matrix& v = table.values[i];
    const double norm = v.norm();
    asym = std::max(asym, std::abs(v(0, 1) - v(1, 0)) / norm);
    imag = std::max(imag, v.imag().norm() / norm);
  }

  // Y_3 = L_{2<-0} U_3 and Y_4 = L_{3<-0} U_4 from the determinant formulas.
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / 200);
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < grid.size(); i += stride) picks.push_back(i);
  std::vector<double> w3(picks.size()), w4(picks.size());
  auto self_w = [&](const ChainSpec& prefix, const TransformationMatrix& u, double r) {
    Matrix y(2, 2), dy(2, 2);
    for (std::size_t c = 0; c < 2; ++c) {
      const SolutionVector col{u.entry(0, c), u.entry(1, c)};
      const Matrix d = transform_solution_derivatives(prefix, col, r, 1).value;
      y.col(static_cast<Eigen::Index>(c)) = d.col(0);
      dy.col(static_cast<Eigen::Index>(c)) = d.col(1);
    }
    return self_wronskian(y, dy).norm() / (y.norm() * dy.norm());
  };
  const auto p2 = chain.prefix(2);
  const auto p3 = chain.prefix(3);
  parallel_for(picks.size(), [&](std::size_t i) {
    const double r = grid[picks[i]];
    w3[i] = self_w(p2, chain.link(2), r);
    w4[i] = self_w(p3, chain.link(3), r);
  });
  out.measurements.push_back({"max |V_12 - V_21| / |V|", asym, 1e-8});
  out.measurements.push_back({"max |Im V| / |V|", imag, 1e-8});
  out.measurements.push_back({"max |W[Y3,Y3]| / (|Y3| |Y3'|)", *std::max_element(w3.begin(), w3.end()), 1e-8});
  out.measurements.push_back({"max |W[Y4,Y4]| / (|Y4| |Y4'|)", *std::max_element(w4.begin(), w4.end()), 1e-8});
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu radii on [%g, %g] fm (%zu flagged), self-Wronskians at %zu radii",
                grid.size(), cfg.kvg_r_min, cfg.kvg_r_max, flagged, picks.size());
  out.detail = buf;
  out.seconds = clock.seconds();
  return out;
}

CheckResult check_determinant_identities(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{7, "Sylvester identity and row-replacement identity", {}, 0.0, {}};
  std::mt19937_64 rng(cfg.seed + 7);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(2, 7);
  int exact_mismatch = 0;
  for (int s = 0; s < cfg.sylvester_samples; ++s) {
    const std::size_t n = dim(rng);
    const std::size_t p = 1 + rng() % (n - 1);
    IntegerMatrix a(n, n);
    for (auto& x : a.storage()) x = entry(rng);
    const auto sides = sylvester_check(a, p);
    if (sides.lhs != sides.rhs) ++exact_mismatch;
  }
  double float_err = 0.0;
  for (int s = 0; s < cfg.sylvester_samples; ++s) {
    const std::size_t n = dim(rng);
    const std::size_t p = 1 + rng() % (n - 1);
    const auto sides = sylvester_check(to_dense(random_complex(rng, n, n)), p);
    float_err = std::max(float_err, std::abs(sides.lhs - sides.rhs) / std::max(std::abs(sides.lhs), std::abs(sides.rhs)));
  }
  double replacement_err = 0.0;
  std::uniform_int_distribution<std::size_t> pdist(1, 5), ndist(1, 4);
  for (int s = 0; s < cfg.row_replacement_samples; ++s) {
    const std::size_t p = pdist(rng);
    const std::size_t extra = ndist(rng);
    const auto a = to_dense(random_complex(rng, p + 2, p + extra));
    const RowReplacementIndices idx{rng() % 2, p + rng() % extra, rng() % 2, rng() % p};
    const auto sides = row_replacement_check(a, p, idx);
    const double scale = std::max({std::abs(sides.lhs), std::abs(sides.rhs_terms[0]), std::abs(sides.rhs_terms[1])});
    replacement_err = std::max(replacement_err, scale == 0.0 ? 0.0 : std::abs(sides.lhs - sides.rhs) / scale);
  }
  out.measurements.push_back({"integer Sylvester mismatches (exact arithmetic)", static_cast<double>(exact_mismatch), 1.0});
  out.measurements.push_back({"max relative Sylvester error (complex doubles)", float_err, 1e-9});
  out.measurements.push_back({"max row-replacement identity error relative to its largest product", replacement_err, 1e-9});
  out.detail = std::to_string(cfg.sylvester_samples) + " integer + " + std::to_string(cfg.sylvester_samples) +
               " float matrices of size 2..7, " + std::to_string(cfg.row_replacement_samples) + " row-replacement instances";
  out.seconds = clock.seconds();
  return out;
}

CheckResult check_short_range_tail(const VerificationConfig& cfg) {
  const Stopwatch clock;
  CheckResult out{8, "short-range tail of Delta V", {}, 0.0, {}};
  const auto table = kvg_table(cfg);
  double worst = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double r = table.grid[i];
    if (r < 15.0 || r > 20.0) continue;
    ++used;
    const Eigen::MatrixXd dv = table.real_value(i) - Eigen::MatrixXd(kvg_asymptotic_background(r));
    worst = std::max(worst, dv.cwiseAbs().maxCoeff());
  }
  if (used == 0) worst = std::numeric_limits<double>::infinity();
  out.measurements.push_back({"max |Delta V| on [15, 20] fm", worst, 1e-3});
  out.detail = std::to_string(used) + " radii; Delta V = V - diag(6/r^2, 0)";
  out.seconds = clock.seconds();
  return out;
}

std::vector<CheckResult> run_all_checks(const VerificationConfig& cfg) {
  return {check_oracle_equivalence(cfg), check_schrodinger_residual(cfg), check_eta(cfg),
          check_smatrix_structure(cfg),  check_end_to_end_smatrix(cfg),   check_kvg_symmetry(cfg),
          check_determinant_identities(cfg), check_short_range_tail(cfg)};
}

std::string format_check(const CheckResult& check) {
  std::ostringstream s;
  s << (check.passed() ? "[PASS] " : "[FAIL] ") << check.criterion << ' ' << check.name;
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s)", check.seconds);
  s << buf << '\n';
  for (const auto& m : check.measurements) {
    std::snprintf(buf, sizeof buf, "%.3e < %.1e", m.value, m.tolerance);
    s << "    " << (m.passed() ? "ok   " : "FAIL ") << m.label << ": " << buf << '\n';
  }
  if (!check.detail.empty()) s << "    " << check.detail << '\n';
  return s.str();
}

}  // namespace darboux
