#pragma once

// JSON run configuration of the darboux tool.
//
//   {
//     "command": "potential",
//     "chain": {
//       "n": 2, "m": 1, "background": [0, 2],
//       "links": [
//         {"type": "singular", "active": [[{"basis": "cosh", "k": 0.8}]]},
//         {"type": "regular", "spectral": ..., "entries": [[e11, e12], [e21, e22]]}
//       ]
//     },
//     "grid": {"r_min": 0.01, "r_max": 20, "count": 400, "spacing": "linear"},
//     "output": {"path": "v.csv", "format": "csv"}
//   }
//
// An entry is {"basis": kind, "k": number | [re, im], "coefficient": number | [re, im]}
// or the literals 0 and 1. "chain": "kvg" selects the built-in neutron-proton
// chain with the top-level k1, k2, chi.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/chain.hpp"
#include "darboux/grid.hpp"
#include "darboux/scattering.hpp"

namespace darboux::cli {

enum class Command { potential, solution, smatrix, kvg, verify };
enum class OutputFormat { csv, json };

std::string_view to_string(Command command);

/// Every validation failure found in one pass over the document.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

struct EntrySpec {
  std::string basis;  // a basis kind, or "zero" / "one"
  cplx k{};
  cplx coefficient{1.0};
};

struct LinkSpec {
  bool singular = false;
  /// Singular: m x m active block; regular: n x n. Row-major.
  std::vector<EntrySpec> entries;
};

struct ChainDescription {
  bool kvg = false;
  std::size_t n = 0;
  std::size_t m = 0;
  /// Angular momentum per channel of the background (0 is free).
  std::vector<int> background_l;
  std::vector<LinkSpec> links;
};

struct GridSpec {
  double r_min = kDefaultRMin;
  double r_max = kDefaultRMax;
  std::size_t count = 400;
  RadialGrid::Spacing spacing = RadialGrid::Spacing::linear;

  RadialGrid make() const { return RadialGrid::make(r_min, r_max, count, spacing); }
};

struct Tolerances {
  /// Max |Im V| / max |V| before `potential` reports a numerical error.
  double imaginary = 1e-8;
  /// Allowed deviation of V from the centrifugal barrier at the matching radius.
  double tail = 1e-6;
};

struct RunConfig {
  Command command = Command::potential;
  std::optional<ChainDescription> chain;
  /// Seed solution for `solution`, one entry per channel.
  std::vector<EntrySpec> psi;
  GridSpec grid;
  std::vector<double> k_list;
  /// Asymptotic angular momentum per channel for `smatrix`; defaults to the background.
  std::vector<int> channel_l;
  KvGParameters kvg;
  /// `kvg` also integrates the coupled equations at every k.
  bool numeric_smatrix = false;
  std::uint64_t seed = 0;
  int random_chains = 24;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  Tolerances tolerances;
};

/// Throws ConfigError listing syntax errors (with line and column) or all
/// semantic errors. `command` fills in a missing "command" key and must
/// agree with it when both are given.
RunConfig parse_config(std::string_view text, std::optional<Command> command = std::nullopt);

std::optional<Command> parse_command(std::string_view name);

/// Re-checks the parts command-line overrides can touch.
void validate_grid(const GridSpec& grid);

ChainSpec build_chain(const ChainDescription& chain, const KvGParameters& kvg);
SolutionVector build_solution(const std::vector<EntrySpec>& psi, const ChainSpec& chain);

}  // namespace darboux::cli
