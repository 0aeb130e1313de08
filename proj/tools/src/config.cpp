#include "darboux_cli/config.hpp"

#include <cmath>
#include <string>

#include "json.hpp"

namespace darboux::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "\n") + l;
  return out;
}

// Collects messages while walking the document; every accessor returns a
// fallback value after recording an error so the walk can continue.
class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& where, const std::string& what) { errors.push_back(where + ": " + what); }

  std::optional<double> number(const json& node, const std::string& where) {
    if (!node.is_number()) {
      fail(where, "expected a number");
      return std::nullopt;
    }
    const double v = node.get<double>();
    if (!std::isfinite(v)) {
      fail(where, "must be finite");
      return std::nullopt;
    }
    return v;
  }

  std::optional<cplx> complex(const json& node, const std::string& where) {
    if (node.is_array()) {
      if (node.size() != 2) {
        fail(where, "complex values are [re, im]");
        return std::nullopt;
      }
      const auto re = number(node[0], where + "[0]");
      const auto im = number(node[1], where + "[1]");
      if (!re || !im) return std::nullopt;
      return cplx{*re, *im};
    }
    const auto v = number(node, where);
    if (!v) return std::nullopt;
    return cplx{*v};
  }

  std::optional<long long> integer(const json& node, const std::string& where) {
    if (!node.is_number_integer()) {
      fail(where, "expected an integer");
      return std::nullopt;
    }
    return node.get<long long>();
  }

  std::optional<std::string> text(const json& node, const std::string& where) {
    if (!node.is_string()) {
      fail(where, "expected a string");
      return std::nullopt;
    }
    return node.get<std::string>();
  }

  std::optional<EntrySpec> entry(const json& node, const std::string& where) {
    if (node.is_number()) {
      const double v = node.get<double>();
      if (v == 0.0) return EntrySpec{"zero", {}, {}};
      if (v == 1.0) return EntrySpec{"one", {}, {1.0}};
      fail(where, "numeric entries must be 0 or 1");
      return std::nullopt;
    }
    if (!node.is_object()) {
      fail(where, "expected an entry object, 0 or 1");
      return std::nullopt;
    }
    EntrySpec out;
    bool ok = true;
    if (!node.contains("basis")) {
      fail(where, "missing \"basis\"");
      ok = false;
    } else if (auto b = text(node["basis"], where + ".basis")) {
      try {
        (void)parse_basis_kind(*b);
        out.basis = *b;
      } catch (const ArgumentError& e) {
        fail(where + ".basis", e.what());
        ok = false;
      }
    } else {
      ok = false;
    }
    if (node.contains("k")) {
      if (auto k = complex(node["k"], where + ".k")) out.k = *k;
      else ok = false;
    } else if (out.basis != "constant") {
      fail(where, "missing \"k\"");
      ok = false;
    }
    if (node.contains("coefficient")) {
      if (auto c = complex(node["coefficient"], where + ".coefficient")) out.coefficient = *c;
      else ok = false;
    }
    return ok ? std::optional(out) : std::nullopt;
  }

  std::vector<EntrySpec> matrix(const json& node, std::size_t size, const std::string& where, bool& ok) {
    std::vector<EntrySpec> out;
    if (!node.is_array() || node.size() != size) {
      fail(where, "expected " + std::to_string(size) + " rows");
      ok = false;
      return out;
    }
    for (std::size_t i = 0; i < size; ++i) {
      const auto& row = node[i];
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != size) {
        fail(at, "expected " + std::to_string(size) + " entries");
        ok = false;
        continue;
      }
      for (std::size_t j = 0; j < size; ++j) {
        auto e = entry(row[j], at + "[" + std::to_string(j) + "]");
        if (e) out.push_back(*e);
        else ok = false;
      }
    }
    return out;
  }
};

void read_grid(Reader& in, const json& node, GridSpec& grid) {
  if (!node.is_object()) {
    in.fail("grid", "expected an object");
    return;
  }
  if (node.contains("r_min"))
    if (auto v = in.number(node["r_min"], "grid.r_min")) grid.r_min = *v;
  if (node.contains("r_max"))
    if (auto v = in.number(node["r_max"], "grid.r_max")) grid.r_max = *v;
  if (node.contains("count")) {
    if (auto v = in.integer(node["count"], "grid.count")) {
      if (*v < 2) in.fail("grid.count", "needs at least 2 points");
      else grid.count = static_cast<std::size_t>(*v);
    }
  }
  if (node.contains("spacing")) {
    if (auto s = in.text(node["spacing"], "grid.spacing")) {
      if (*s == "linear") grid.spacing = RadialGrid::Spacing::linear;
      else if (*s == "log") grid.spacing = RadialGrid::Spacing::log;
      else in.fail("grid.spacing", "must be \"linear\" or \"log\"");
    }
  }
  if (!(grid.r_min > 0.0)) in.fail("grid", "r_min must be positive");
  if (!(grid.r_max > grid.r_min)) in.fail("grid", "r_max must exceed r_min");
}

std::optional<ChainDescription> read_chain(Reader& in, const json& node) {
  if (node.is_string()) {
    if (node.get<std::string>() == "kvg") return ChainDescription{true, 2, 1, {0, 2}, {}};
    in.fail("chain", "the only named chain is \"kvg\"");
    return std::nullopt;
  }
  if (!node.is_object()) {
    in.fail("chain", "expected an object or \"kvg\"");
    return std::nullopt;
  }
  const std::size_t before = in.errors.size();
  ChainDescription out;
  std::optional<long long> n;
  std::optional<long long> m = 1;
  if (node.contains("n")) n = in.integer(node["n"], "chain.n");
  else in.fail("chain", "missing \"n\"");
  if (node.contains("m")) m = in.integer(node["m"], "chain.m");
  if (n && *n < 2) in.fail("chain.n", "needs at least 2 channels");
  if (m && *m < 1) in.fail("chain.m", "must be at least 1");
  if (n && m && *m >= *n) in.fail("chain", "m must be < n");
  if (!n || !m || in.errors.size() != before) return std::nullopt;
  out.n = static_cast<std::size_t>(*n);
  out.m = static_cast<std::size_t>(*m);

  out.background_l.assign(out.n, 0);
  if (node.contains("background")) {
    const auto& bg = node["background"];
    if (!bg.is_array() || bg.size() != out.n) {
      in.fail("chain.background", "expected one angular momentum per channel");
    } else {
      for (std::size_t i = 0; i < out.n; ++i) {
        const std::string at = "chain.background[" + std::to_string(i) + "]";
        if (auto l = in.integer(bg[i], at)) {
          if (*l < 0) in.fail(at, "must be >= 0");
          else out.background_l[i] = static_cast<int>(*l);
        }
      }
    }
  }

  if (!node.contains("links") || !node["links"].is_array() || node["links"].empty()) {
    in.fail("chain.links", "expected a non-empty array");
    return std::nullopt;
  }
  bool regular_seen = false;
  const auto& links = node["links"];
  for (std::size_t k = 0; k < links.size(); ++k) {
    const std::string at = "chain.links[" + std::to_string(k) + "]";
    const auto& link = links[k];
    if (!link.is_object() || !link.contains("type") || !link["type"].is_string()) {
      in.fail(at, "expected an object with \"type\": \"singular\" | \"regular\"");
      continue;
    }
    const auto type = link["type"].get<std::string>();
    LinkSpec spec;
    bool ok = true;
    if (type == "singular") {
      spec.singular = true;
      if (regular_seen) in.fail(at, "singular link listed after a regular link");
      std::size_t size = out.m;
      if (link.contains("m")) {
        if (auto lm = in.integer(link["m"], at + ".m")) {
          if (*lm < 1 || static_cast<std::size_t>(*lm) >= out.n) {
            in.fail(at, "m must be < n");
            continue;
          }
          if (static_cast<std::size_t>(*lm) != out.m) in.fail(at, "m differs from chain.m");
          size = static_cast<std::size_t>(*lm);
        }
      } else if (link.contains("active") && link["active"].is_array() && link["active"].size() >= out.n) {
        in.fail(at, "m must be < n");
        continue;
      }
      if (!link.contains("active")) {
        in.fail(at, "missing \"active\"");
        continue;
      }
      spec.entries = in.matrix(link["active"], size, at + ".active", ok);
    } else if (type == "regular") {
      regular_seen = true;
      if (!link.contains("entries")) {
        in.fail(at, "missing \"entries\"");
        continue;
      }
      spec.entries = in.matrix(link["entries"], out.n, at + ".entries", ok);
    } else {
      in.fail(at + ".type", "must be \"singular\" or \"regular\"");
      continue;
    }
    if (ok) out.links.push_back(std::move(spec));
  }
  if (in.errors.size() != before) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "potential") return Command::potential;
  if (name == "solution") return Command::solution;
  if (name == "smatrix") return Command::smatrix;
  if (name == "kvg") return Command::kvg;
  if (name == "verify") return Command::verify;
  return std::nullopt;
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::potential: return "potential";
    case Command::solution: return "solution";
    case Command::smatrix: return "smatrix";
    case Command::kvg: return "kvg";
    case Command::verify: return "verify";
  }
  return "?";
}

ConfigError::ConfigError(std::vector<std::string> messages) : Error(join(messages)), messages_(std::move(messages)) {}

void validate_grid(const GridSpec& grid) {
  std::vector<std::string> errors;
  if (!(grid.r_min > 0.0)) errors.emplace_back("grid: r_min must be positive");
  if (!(grid.r_max > grid.r_min)) errors.emplace_back("grid: r_max must exceed r_min");
  if (grid.count < 2) errors.emplace_back("grid: needs at least 2 points");
  if (!errors.empty()) throw ConfigError(std::move(errors));
}

namespace {

ChannelPotential channel_for(int l) { return l == 0 ? ChannelPotential::free() : ChannelPotential::centrifugal(l); }

ScaledBasis make_entry(const EntrySpec& e, const ChannelPotential& channel) {
  if (e.basis == "zero") return zero_entry();
  if (e.basis == "one") return unit_entry();
  return {e.coefficient, make_basis(parse_basis_kind(e.basis), e.k, channel)};
}

}  // namespace

ChainSpec build_chain(const ChainDescription& chain, const KvGParameters& kvg) {
  if (chain.kvg) return build_kvg_chain(kvg);
  std::vector<ChannelPotential> background;
  for (int l : chain.background_l) background.push_back(channel_for(l));
  std::vector<TransformationMatrix> links;
  for (const auto& link : chain.links) {
    const std::size_t size = link.singular ? chain.m : chain.n;
    std::vector<ScaledBasis> entries;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) entries.push_back(make_entry(link.entries[i * size + j], background[i]));
    links.push_back(link.singular ? TransformationMatrix::singular(chain.n, chain.m, std::move(entries))
                                  : TransformationMatrix::regular(chain.n, std::move(entries)));
  }
  return ChainSpec(chain.n, chain.m, std::move(background), std::move(links));
}

SolutionVector build_solution(const std::vector<EntrySpec>& psi, const ChainSpec& chain) {
  if (psi.size() != chain.n()) throw ArgumentError("psi must have one entry per channel");
  SolutionVector out;
  for (std::size_t i = 0; i < psi.size(); ++i) out.push_back(make_entry(psi[i], chain.background()[i]));
  return out;
}

RunConfig parse_config(std::string_view text, std::optional<Command> command) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError({"syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                       e.what()});
  }
  if (!doc.is_object()) throw ConfigError({"top level must be an object"});

  Reader in;
  RunConfig cfg;
  if (!doc.contains("command")) {
    if (command) cfg.command = *command;
    else in.fail("command", "missing");
  } else if (auto name = in.text(doc["command"], "command")) {
    if (auto c = parse_command(*name)) {
      cfg.command = *c;
      if (command && *command != *c)
        in.fail("command", "config is for '" + *name + "' but '" + std::string(to_string(*command)) + "' was requested");
    } else {
      in.fail("command", "unknown command '" + *name + "'");
    }
  }

  for (const char* key : {"k1", "k2", "chi"}) {
    if (!doc.contains(key)) continue;
    if (auto v = in.number(doc[key], key)) {
      if (std::string_view(key) == "k1") cfg.kvg.k1 = *v;
      else if (std::string_view(key) == "k2") cfg.kvg.k2 = *v;
      else cfg.kvg.chi = *v;
    }
  }
  try {
    cfg.kvg.validate();
  } catch (const ArgumentError& e) {
    in.fail("k1/k2/chi", e.what());
  }

  if (doc.contains("chain")) cfg.chain = read_chain(in, doc["chain"]);
  if (doc.contains("grid")) read_grid(in, doc["grid"], cfg.grid);

  if (doc.contains("k")) {
    const auto& ks = doc["k"];
    if (!ks.is_array()) {
      in.fail("k", "expected an array of wavenumbers");
    } else {
      for (std::size_t i = 0; i < ks.size(); ++i) {
        const std::string at = "k[" + std::to_string(i) + "]";
        if (auto v = in.number(ks[i], at)) {
          if (*v <= 0.0) in.fail(at, "must be positive");
          else cfg.k_list.push_back(*v);
        }
      }
    }
  }
  if (doc.contains("channel_l")) {
    const auto& ls = doc["channel_l"];
    if (!ls.is_array()) in.fail("channel_l", "expected an array");
    else
      for (std::size_t i = 0; i < ls.size(); ++i)
        if (auto l = in.integer(ls[i], "channel_l[" + std::to_string(i) + "]")) cfg.channel_l.push_back(static_cast<int>(*l));
  }
  if (doc.contains("psi")) {
    const auto& psi = doc["psi"];
    if (!psi.is_array()) in.fail("psi", "expected one entry per channel");
    else
      for (std::size_t i = 0; i < psi.size(); ++i)
        if (auto e = in.entry(psi[i], "psi[" + std::to_string(i) + "]")) cfg.psi.push_back(*e);
  }
  if (doc.contains("numeric_smatrix")) {
    if (doc["numeric_smatrix"].is_boolean()) cfg.numeric_smatrix = doc["numeric_smatrix"].get<bool>();
    else in.fail("numeric_smatrix", "expected true or false");
  }
  if (doc.contains("seed"))
    if (auto v = in.integer(doc["seed"], "seed")) cfg.seed = static_cast<std::uint64_t>(*v);
  if (doc.contains("random_chains")) {
    if (auto v = in.integer(doc["random_chains"], "random_chains")) {
      if (*v < 1) in.fail("random_chains", "must be positive");
      else cfg.random_chains = static_cast<int>(*v);
    }
  }
  if (doc.contains("output")) {
    const auto& out = doc["output"];
    if (!out.is_object()) {
      in.fail("output", "expected an object");
    } else {
      if (out.contains("path"))
        if (auto p = in.text(out["path"], "output.path")) cfg.output_path = *p;
      if (out.contains("format")) {
        if (auto f = in.text(out["format"], "output.format")) {
          if (*f == "csv") cfg.format = OutputFormat::csv;
          else if (*f == "json") cfg.format = OutputFormat::json;
          else in.fail("output.format", "must be \"csv\" or \"json\"");
        }
      }
    }
  }
  if (doc.contains("tolerances")) {
    const auto& tol = doc["tolerances"];
    if (!tol.is_object()) {
      in.fail("tolerances", "expected an object");
    } else {
      if (tol.contains("imaginary"))
        if (auto v = in.number(tol["imaginary"], "tolerances.imaginary")) cfg.tolerances.imaginary = *v;
      if (tol.contains("tail"))
        if (auto v = in.number(tol["tail"], "tolerances.tail")) cfg.tolerances.tail = *v;
    }
  }

  // Requirements per command.
  const bool have_chain = doc.contains("chain");
  switch (cfg.command) {
    case Command::potential:
      if (!have_chain) in.fail("chain", "required by the potential command");
      break;
    case Command::solution:
      if (!have_chain) in.fail("chain", "required by the solution command");
      if (!doc.contains("psi")) in.fail("psi", "required by the solution command");
      else if (cfg.chain && cfg.psi.size() != cfg.chain->n) in.fail("psi", "needs one entry per channel");
      break;
    case Command::smatrix:
      if (!have_chain) in.fail("chain", "required by the smatrix command");
      if (cfg.k_list.empty()) in.errors.emplace_back("k-list required");
      if (cfg.chain && !cfg.channel_l.empty() && cfg.channel_l.size() != cfg.chain->n)
        in.fail("channel_l", "needs one value per channel");
      break;
    case Command::kvg:
    case Command::verify:
      break;
  }

  // Constructing the chain catches what the structural pass cannot
  // (basis/channel mismatches, repeated spectral values).
  if (cfg.chain && in.errors.empty()) {
    try {
      (void)build_chain(*cfg.chain, cfg.kvg);
    } catch (const Error& e) {
      in.fail("chain", e.what());
    }
  }
  if (!in.errors.empty()) throw ConfigError(std::move(in.errors));
  return cfg;
}

}  // namespace darboux::cli
