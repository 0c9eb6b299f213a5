#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qpert::cli {

enum class Format { csv, json };

struct OutputSpec {
  Format format = Format::csv;
  std::string path;  // empty: standard output
  int precision = 5;
};

/// Floating cells are printed either with `precision` decimal places or in
/// scientific notation with `precision` digits after the point.
struct Fixed {
  double value;
};
struct Scientific {
  double value;
};

using Cell = std::variant<long long, Fixed, Scientific, bool, std::string>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// CSV: header row, ',' separators, '.' decimal point, LF line endings.
std::string render_csv(const Table& table, int precision);

/// JSON: {"command": ..., "columns": [...], "rows": [{column: value, ...}, ...]}.
/// Numbers carry the same rounding as the CSV rendering; NaN becomes null.
std::string render_json(const Table& table, int precision);

std::string render(const Table& table, const OutputSpec& spec);

}  // namespace qpert::cli
