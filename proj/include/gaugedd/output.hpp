#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gaugedd {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Command output: the resolved config plus one or more tables.
struct Report {
  std::string command;
  nlohmann::json config;
  std::vector<Table> tables;

  const Table& table(const std::string& name) const;
};

std::string version_string();

// Doubles with 17 significant digits, '.' decimal, comma delimiter, LF line
// endings. Metadata lines start with '#'.
std::string format_double(double v);
std::string write_csv(const Report& report);
std::string write_json(const Report& report);

// Reads back the tables of a CSV report; every cell is returned as text.
std::vector<Table> read_csv_tables(const std::string& text);

}  // namespace gaugedd
