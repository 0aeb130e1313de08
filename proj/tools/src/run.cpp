#include "darboux_cli/run.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "darboux/coupled_solver.hpp"
#include "darboux/parallel.hpp"
#include "darboux/transform.hpp"
#include "darboux/verification.hpp"

namespace darboux::cli {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string number_list(const std::vector<double>& values) {
  std::string out;
  for (double v : values) out += (out.empty() ? "" : " ") + format_number(v, 9);
  return out;
}

void common_metadata(OutputTable& table, const RunConfig& cfg) {
  table.metadata.emplace_back("tool", "darboux " + tool_version());
  table.metadata.emplace_back("command", std::string(to_string(cfg.command)));
}

std::string channel_name(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

std::vector<double> pole_radii(const PotentialTable& table) {
  std::vector<double> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.pole[i]) out.push_back(table.grid[i]);
  return out;
}

OutputTable potential_table(const RunConfig& cfg, const ChainSpec& chain, const PotentialTable& table) {
  const std::size_t n = chain.n();
  OutputTable out;
  out.name = "potential";
  common_metadata(out, cfg);
  out.metadata.emplace_back("channels", std::to_string(n));
  out.metadata.emplace_back("links", std::to_string(chain.size()));
  out.metadata.emplace_back("singular_links", std::to_string(chain.singular_count()));
  out.metadata.emplace_back("pole_radii", number_list(pole_radii(table)));
  out.metadata.emplace_back("sign_change_radii", number_list(table.sign_change_radii));
  out.columns.push_back({"r", "fm"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.columns.push_back({"V" + channel_name(i, j), "fm^-2"});
  const bool split = n == 2;
  PotentialDecomposition parts;
  if (split) {
    parts = decompose_potential(table);
    for (const char* name : {"V_C", "V_T", "V_O"}) out.columns.push_back({name, "fm^-2"});
  }
  out.columns.push_back({"pole", ""});
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::vector<double> row{table.grid[r]};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) row.push_back(table.values[r](i, j).real());
    if (split) {
      row.push_back(parts.central[r]);
      row.push_back(parts.tensor[r]);
      row.push_back(parts.spin_orbit[r]);
    }
    row.push_back(table.pole[r] ? 1.0 : 0.0);
    out.add_row(std::move(row));
  }
  return out;
}

PotentialOptions potential_options(const RunConfig& cfg) {
  PotentialOptions po;
  po.imaginary_tolerance = cfg.tolerances.imaginary;
  return po;
}

RunResult run_potential(const RunConfig& cfg) {
  const auto chain = build_chain(*cfg.chain, cfg.kvg);
  const auto table = compute_potential(chain, cfg.grid.make(), potential_options(cfg));
  return {{potential_table(cfg, chain, table)}, {}, kExitSuccess};
}

RunResult run_solution(const RunConfig& cfg) {
  const auto chain = build_chain(*cfg.chain, cfg.kvg);
  const auto psi = build_solution(cfg.psi, chain);
  const auto grid = cfg.grid.make();
  const std::size_t n = chain.n();
  std::vector<Flagged<Matrix>> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { values[i] = transform_solution_derivatives(chain, psi, grid[i], 1); });

  OutputTable out;
  out.name = "solution";
  common_metadata(out, cfg);
  out.columns.push_back({"r", "fm"});
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = std::to_string(j + 1);
    out.columns.push_back({"phi" + c + "_re", ""});
    out.columns.push_back({"phi" + c + "_im", ""});
    out.columns.push_back({"dphi" + c + "_re", "fm^-1"});
    out.columns.push_back({"dphi" + c + "_im", "fm^-1"});
  }
  out.columns.push_back({"pole", ""});
  std::vector<double> poles;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(values[i].value(j, 0).real());
      row.push_back(values[i].value(j, 0).imag());
      row.push_back(values[i].value(j, 1).real());
      row.push_back(values[i].value(j, 1).imag());
    }
    row.push_back(values[i].singular_point ? 1.0 : 0.0);
    if (values[i].singular_point) poles.push_back(grid[i]);
    out.add_row(std::move(row));
  }
  out.metadata.emplace_back("pole_radii", number_list(poles));
  return {{std::move(out)}, {}, kExitSuccess};
}

// k, then re/im of every S entry, then eigenphases and mixing for two channels.
OutputTable smatrix_table(const RunConfig& cfg, const std::string& name, std::size_t n, const std::string& suffix = {}) {
  OutputTable out;
  out.name = name;
  common_metadata(out, cfg);
  out.columns.push_back({"k", "fm^-1"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.columns.push_back({"S" + channel_name(i, j) + suffix + "_re", ""});
      out.columns.push_back({"S" + channel_name(i, j) + suffix + "_im", ""});
    }
  if (n == 2)
    for (const char* c : {"delta1", "delta2", "mixing"}) out.columns.push_back({c + suffix, "deg"});
  return out;
}

void append_smatrix(std::vector<double>& row, const Eigen::MatrixXcd& s) {
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      row.push_back(s(i, j).real());
      row.push_back(s(i, j).imag());
    }
  if (s.rows() == 2) {
    const auto a = analyze_smatrix(0.0, s);
    row.push_back(a.delta1 * kRadToDeg);
    row.push_back(a.delta2 * kRadToDeg);
    row.push_back(a.mixing * kRadToDeg);
  }
}

RunResult run_smatrix(const RunConfig& cfg) {
  const auto chain = build_chain(*cfg.chain, cfg.kvg);
  std::vector<int> ls = cfg.channel_l;
  if (ls.empty()) ls = cfg.chain->kvg ? std::vector<int>{2, 0} : cfg.chain->background_l;
  const auto table = compute_potential(chain, cfg.grid.make(), potential_options(cfg));
  CoupledSolverOptions opts;
  opts.tail_tolerance = cfg.tolerances.tail;
  std::vector<Eigen::MatrixXcd> s(cfg.k_list.size());
  parallel_for(cfg.k_list.size(), [&](std::size_t i) { s[i] = numerical_smatrix(table, cfg.k_list[i], ls, opts); });

  auto out = smatrix_table(cfg, "smatrix", chain.n());
  std::string l_text;
  for (int l : ls) l_text += (l_text.empty() ? "" : " ") + std::to_string(l);
  out.metadata.emplace_back("channel_l", l_text);
  out.metadata.emplace_back("matching_radius", format_number(table.grid.back(), 9));
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<double> row{cfg.k_list[i]};
    append_smatrix(row, s[i]);
    out.add_row(std::move(row));
  }
  return {{std::move(out)}, {}, kExitSuccess};
}

std::vector<double> default_k_list() {
  std::vector<double> out;
  for (int i = 1; i <= 60; ++i) out.push_back(0.05 * i);
  return out;
}

RunResult run_kvg(const RunConfig& cfg) {
  const auto& p = cfg.kvg;
  const auto chain = build_kvg_chain(p);
  RunResult result;
  const auto table = compute_potential(chain, cfg.grid.make(), potential_options(cfg));
  auto potential = potential_table(cfg, chain, table);
  potential.metadata.emplace_back("background", "channel 1: d wave (6/r^2 asymptotically), channel 2: s wave");
  result.tables.push_back(std::move(potential));

  const auto ks = cfg.k_list.empty() ? default_k_list() : cfg.k_list;
  auto smatrix = smatrix_table(cfg, "smatrix", 2);
  smatrix.metadata.emplace_back("source", "closed form");
  std::vector<Eigen::Matrix2cd> numeric;
  if (cfg.numeric_smatrix) {
    const auto fine = compute_potential(chain, RadialGrid::logarithmic(1e-2, 25.0, 2000), potential_options(cfg));
    numeric.resize(ks.size());
    CoupledSolverOptions opts;
    opts.tail_tolerance = cfg.tolerances.tail;
    parallel_for(ks.size(), [&](std::size_t i) {
      numeric[i] = kvg_to_closed_form_convention(numerical_smatrix(fine, ks[i], {2, 0}, opts));
    });
    const auto extra = smatrix_table(cfg, "", 2, "_num");
    smatrix.columns.insert(smatrix.columns.end(), extra.columns.begin() + 1, extra.columns.end());
    smatrix.metadata.emplace_back("numeric", "coupled-channel integration of the tabulated potential");
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::vector<double> row{ks[i]};
    append_smatrix(row, closed_form_smatrix(p, ks[i]).S);
    if (cfg.numeric_smatrix) append_smatrix(row, numeric[i]);
    smatrix.add_row(std::move(row));
  }
  result.tables.push_back(std::move(smatrix));

  OutputTable summary;
  summary.name = "summary";
  common_metadata(summary, cfg);
  summary.columns = {{"k1", "fm^-1"}, {"k2", "fm^-1"}, {"chi", "fm^-1"}, {"eta_formula", ""},
                     {"eta_residue", ""}, {"pole_count", ""}};
  const auto residue = eta_from_residues(p);
  summary.add_row({p.k1, p.k2, p.chi, eta_ratio(p), residue.eta, static_cast<double>(pole_radii(table).size())});
  result.tables.push_back(std::move(summary));
  return result;
}

RunResult run_verify(const RunConfig& cfg) {
  VerificationConfig vc;
  vc.kvg = cfg.kvg;
  if (cfg.seed != 0) vc.seed = cfg.seed;
  vc.chains = cfg.random_chains;
  const auto checks = run_all_checks(vc);

  RunResult result;
  OutputTable out;
  out.name = "verify";
  common_metadata(out, cfg);
  out.columns = {{"criterion", ""}, {"measurement", ""}, {"value", ""}, {"tolerance", ""}, {"passed", ""}};
  bool all = true;
  for (const auto& c : checks) {
    result.report += format_check(c);
    all = all && c.passed();
    out.metadata.emplace_back("criterion " + std::to_string(c.criterion), c.name);
    for (std::size_t j = 0; j < c.measurements.size(); ++j) {
      const auto& m = c.measurements[j];
      // Timings vary between runs; they stay in the report only.
      if (m.label.rfind("runtime", 0) == 0) continue;
      out.metadata.emplace_back("measurement " + std::to_string(c.criterion) + "." + std::to_string(j), m.label);
      out.add_row({static_cast<double>(c.criterion), static_cast<double>(j), m.value, m.tolerance,
                   m.passed() ? 1.0 : 0.0});
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "eta = %.6f (formula %.9f, residue %.9f)\n", eta_ratio(cfg.kvg), eta_ratio(cfg.kvg),
                eta_from_residues(cfg.kvg).eta);
  result.report += buf;
  result.report += all ? "all checks passed\n" : "some checks FAILED\n";
  result.tables.push_back(std::move(out));
  result.exit_code = all ? kExitSuccess : kExitVerificationFailed;
  return result;
}

}  // namespace

std::string tool_version() { return DARBOUX_VERSION; }

RunResult run(const RunConfig& config) {
  switch (config.command) {
    case Command::potential: return run_potential(config);
    case Command::solution: return run_solution(config);
    case Command::smatrix: return run_smatrix(config);
    case Command::kvg: return run_kvg(config);
    case Command::verify: return run_verify(config);
  }
  throw ArgumentError("unknown command");
}

}  // namespace darboux::cli
