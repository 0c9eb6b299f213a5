#include "qpert_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace qpert::cli {

namespace {

std::string format_double(double v, int precision, char conversion) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  const char fmt[] = {'%', '.', '*', conversion, '\0'};
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, precision, v);
  std::string s(buf);
  // "-0.00000" reads as a sign error in a table.
  if (s.find_first_not_of("-0.e+") == std::string::npos && s.front() == '-') {
    s.erase(0, 1);
  }
  return s;
}

std::string cell_text(const Cell& cell, int precision) {
  return std::visit(
      [precision](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, Fixed>) {
          return format_double(v.value, precision, 'f');
        } else if constexpr (std::is_same_v<T, Scientific>) {
          return format_double(v.value, precision, 'e');
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

nlohmann::ordered_json cell_json(const Cell& cell, int precision) {
  if (const auto* b = std::get_if<bool>(&cell)) {
    return *b;
  }
  if (const auto* i = std::get_if<long long>(&cell)) {
    return *i;
  }
  if (const auto* s = std::get_if<std::string>(&cell)) {
    return *s;
  }
  const std::string text = cell_text(cell, precision);
  const double v = std::strtod(text.c_str(), nullptr);
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return v;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width " + std::to_string(row.size()) + " does not match " +
                           std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string render_csv(const Table& table, int precision) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_text(row[c], precision);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, int precision) {
  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      obj[table.columns[c]] = cell_json(row[c], precision);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, const OutputSpec& spec) {
  return spec.format == Format::json ? render_json(table, spec.precision) : render_csv(table, spec.precision);
}

}  // namespace qpert::cli
