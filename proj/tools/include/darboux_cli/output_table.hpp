#pragma once

// Tabular results and their CSV / JSON serializations.
//
// Output is byte-deterministic: json numbers carry 17 significant digits
// (bit-exact round trip), csv numbers 9. Non-finite values (pole rows) are
// written as null / empty fields and read back as NaN.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace darboux::cli {

struct Column {
  std::string name;
  std::string unit;
  friend bool operator==(const Column&, const Column&) = default;
};

struct OutputTable {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  /// Ordered key/value pairs (parameters, flagged pole radii, tool version).
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Throws ArgumentError when the row width differs from the column count.
  void add_row(std::vector<double> row);
  std::size_t column_index(std::string_view column) const;
};

std::string format_number(double v, int significant_digits);

std::string write_json(const std::vector<OutputTable>& tables);
std::string write_csv(const std::vector<OutputTable>& tables);

std::vector<OutputTable> read_json(std::string_view text);
std::vector<OutputTable> read_csv(std::string_view text);

}  // namespace darboux::cli
