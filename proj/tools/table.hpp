#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chialvo::cli {

/// Empty cells print as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

Cell opt(const std::optional<double>& v);

enum class Format { csv, json };

/// Doubles are printed with 17 significant digits.
void write_csv(std::ostream& os, const Table& t);
/// An array of records keyed by column name.
void write_json(std::ostream& os, const Table& t);

std::string format_double(double v);

}  // namespace chialvo::cli
