#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "darboux_cli/config.hpp"
#include "darboux_cli/run.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw darboux::cli::ConfigError({"cannot read config file '" + path + "'"});
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = darboux::cli;

  CLI::App app{"Matrix Darboux transformation chains: potentials, solutions, S-matrices and self-checks"};
  app.set_version_flag("--version", cli::tool_version());
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string spacing;
  double r_min = 0.0;
  double r_max = 0.0;
  std::size_t points = 0;
  app.add_option("command", command, "potential | solution | smatrix | kvg | verify")
      ->required()
      ->check(CLI::IsMember({"potential", "solution", "smatrix", "kvg", "verify"}));
  app.add_option("--config", config_path, "JSON run configuration (optional for kvg and verify)");
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  auto* rmin_opt = app.add_option("--rmin", r_min, "Smallest grid radius (fm)");
  auto* rmax_opt = app.add_option("--rmax", r_max, "Largest grid radius (fm)");
  auto* points_opt = app.add_option("--points", points, "Number of grid points");
  app.add_option("--grid", spacing, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitSuccess : cli::kExitConfigError;
  }

  cli::RunConfig cfg;
  try {
    const auto requested = cli::parse_command(command);
    if (config_path.empty() && *requested != cli::Command::kvg && *requested != cli::Command::verify)
      throw cli::ConfigError({"--config is required for " + command});
    cfg = cli::parse_config(config_path.empty() ? std::string("{}") : read_file(config_path), requested);
    if (*rmin_opt) cfg.grid.r_min = r_min;
    if (*rmax_opt) cfg.grid.r_max = r_max;
    if (*points_opt) cfg.grid.count = points;
    if (spacing == "log") cfg.grid.spacing = darboux::RadialGrid::Spacing::log;
    if (spacing == "linear") cfg.grid.spacing = darboux::RadialGrid::Spacing::linear;
    if (!format.empty()) cfg.format = format == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;
    if (!out_path.empty()) cfg.output_path = out_path;
    cli::validate_grid(cfg.grid);
  } catch (const cli::ConfigError& e) {
    for (const auto& m : e.messages()) std::cerr << "config error: " << m << '\n';
    return cli::kExitConfigError;
  }

  try {
    const auto result = cli::run(cfg);
    const std::string body =
        cfg.format == cli::OutputFormat::json ? cli::write_json(result.tables) : cli::write_csv(result.tables);
    if (!result.report.empty()) std::cout << result.report;
    if (!cfg.output_path.empty()) {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!(out << body)) {
        std::cerr << "error: cannot write '" << cfg.output_path << "'\n";
        return cli::kExitRuntimeError;
      }
    } else if (result.report.empty()) {
      std::cout << body;
    }
    return result.exit_code;
  } catch (const darboux::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitRuntimeError;
  }
}
