#include "darboux_cli/output_table.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "darboux/common.hpp"
#include "json.hpp"

namespace darboux::cli {

namespace {

constexpr int kJsonDigits = 17;
constexpr int kCsvDigits = 9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

void OutputTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw ArgumentError("table " + name + ": row has " + std::to_string(row.size()) + " values for " +
                        std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

std::size_t OutputTable::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == column) return i;
  throw ArgumentError("table " + name + " has no column '" + std::string(column) + "'");
}

std::string format_number(double v, int significant_digits) {
  if (!std::isfinite(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

std::string write_json(const std::vector<OutputTable>& tables) {
  std::string out = "{\n  \"tables\": [";
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& table = tables[t];
    out += t == 0 ? "\n" : ",\n";
    out += "    {\n      \"name\": " + json_string(table.name) + ",\n      \"metadata\": {";
    for (std::size_t i = 0; i < table.metadata.size(); ++i)
      out += (i == 0 ? "" : ", ") + json_string(table.metadata[i].first) + ": " + json_string(table.metadata[i].second);
    out += "},\n      \"columns\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      out += std::string(i == 0 ? "" : ", ") + "{\"name\": " + json_string(table.columns[i].name) +
             ", \"unit\": " + json_string(table.columns[i].unit) + "}";
    out += "],\n      \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out += r == 0 ? "\n        [" : ",\n        [";
      for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
        const auto s = format_number(table.rows[r][c], kJsonDigits);
        out += (c == 0 ? "" : ", ") + (s.empty() ? std::string("null") : s);
      }
      out += "]";
    }
    out += table.rows.empty() ? "]\n    }" : "\n      ]\n    }";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string write_csv(const std::vector<OutputTable>& tables) {
  std::string out;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& table = tables[t];
    if (t > 0) out += "\n";
    out += "# table: " + table.name + "\n";
    for (const auto& [key, value] : table.metadata) out += "# " + key + ": " + value + "\n";
    out += "# units:";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i == 0 ? " " : ",") + table.columns[i].unit;
    out += "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i == 0 ? "" : ",") + table.columns[i].name;
    out += "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out += (c == 0 ? "" : ",") + format_number(row[c], kCsvDigits);
      out += "\n";
    }
  }
  return out;
}

std::vector<OutputTable> read_json(std::string_view text) {
  const auto doc = nlohmann::ordered_json::parse(text.begin(), text.end());
  std::vector<OutputTable> out;
  for (const auto& node : doc.at("tables")) {
    OutputTable table;
    table.name = node.at("name").get<std::string>();
    for (const auto& [key, value] : node.at("metadata").items()) table.metadata.emplace_back(key, value.get<std::string>());
    for (const auto& c : node.at("columns"))
      table.columns.push_back({c.at("name").get<std::string>(), c.at("unit").get<std::string>()});
    for (const auto& row : node.at("rows")) {
      std::vector<double> values;
      for (const auto& v : row) values.push_back(v.is_null() ? kNaN : v.get<double>());
      table.add_row(std::move(values));
    }
    out.push_back(std::move(table));
  }
  return out;
}

std::vector<OutputTable> read_csv(std::string_view text) {
  std::vector<OutputTable> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_pending = false;
  std::vector<std::string> units;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# table: ", 0) == 0) {
      out.emplace_back();
      out.back().name = line.substr(9);
      header_pending = true;
      continue;
    }
    if (out.empty()) throw ArgumentError("csv: data before the first table marker");
    auto& table = out.back();
    if (line.rfind("# units: ", 0) == 0) {
      units = split(std::string_view(line).substr(9), ',');
      continue;
    }
    if (line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ", 2);
      if (colon == std::string::npos) throw ArgumentError("csv: malformed metadata line");
      table.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    const auto fields = split(line, ',');
    if (header_pending) {
      for (std::size_t i = 0; i < fields.size(); ++i) table.columns.push_back({fields[i], i < units.size() ? units[i] : ""});
      header_pending = false;
      continue;
    }
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(f.empty() ? kNaN : std::stod(f));
    table.add_row(std::move(row));
  }
  return out;
}

}  // namespace darboux::cli
