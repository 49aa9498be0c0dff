#include "gaugedd/output.hpp"

#include <cstdio>
#include <sstream>

#include "gaugedd/errors.hpp"

namespace gaugedd {

const Table& Report::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  throw ValidationError("report has no table '" + name + "'");
}

std::string version_string() { return std::string("gaugedd ") + GAUGEDD_VERSION; }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return std::get<std::string>(c);
}

}  // namespace

std::string write_csv(const Report& report) {
  std::ostringstream out;
  out << "# " << version_string() << '\n';
  out << "# command: " << report.command << '\n';
  out << "# config: " << report.config.dump() << '\n';
  for (const auto& t : report.tables) {
    out << "# table: " << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
      out << '\n';
    }
  }
  return out.str();
}

std::string write_json(const Report& report) {
  nlohmann::json j;
  j["version"] = version_string();
  j["command"] = report.command;
  j["config"] = report.config;
  nlohmann::json tables = nlohmann::json::object();
  for (const auto& t : report.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json r = nlohmann::json::object();
      for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
      rows.push_back(std::move(r));
    }
    tables[t.name] = std::move(rows);
  }
  j["tables"] = std::move(tables);
  return j.dump(2) + "\n";
}

std::vector<Table> read_csv_tables(const std::string& text) {
  std::vector<Table> tables;
  std::istringstream in(text);
  std::string line;
  bool expect_header = false;
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
  };
  while (std::getline(in, line)) {
    if (line.rfind("# table: ", 0) == 0) {
      tables.push_back({line.substr(9), {}, {}});
      expect_header = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    if (tables.empty()) throw ValidationError("CSV data before any table marker");
    auto parts = split(line);
    if (expect_header) {
      tables.back().columns = std::move(parts);
      expect_header = false;
      continue;
    }
    std::vector<Cell> row;
    for (auto& p : parts) row.emplace_back(std::move(p));
    tables.back().rows.push_back(std::move(row));
  }
  return tables;
}

}  // namespace gaugedd
