#include "trigimpl/surface/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "trigimpl/errors.hpp"
#include "trigimpl/trig/support_file.hpp"

namespace trigimpl {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string squeeze(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ' ' || s[i] == '\t') continue;
    if (s.substr(i, 5) == "theta") {
      out += "θ";
      i += 4;
      continue;
    }
    out += s[i];
  }
  return out;
}

TrigPoly row_support(const TableRow& row) { return parse_support(row.input); }
SphericalSupport row_spherical(const TableRow& row) { return parse_spherical(row.input); }

}  // namespace

std::vector<TableRow> parse_table(std::string_view text, int table) {
  std::vector<TableRow> rows;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream cs(body);
    for (std::string cell; std::getline(cs, cell, '|');) cells.push_back(trim(cell));
    if (cells.size() != 8) throw ParseError("expected 8 '|' separated cells", line_no, 1);
    TableRow row;
    row.table = table;
    row.label = cells[0];
    row.input = cells[1];
    std::replace(row.input.begin(), row.input.end(), ';', '\n');
    if (cells[2] == "yes") row.symmetric = true;
    else if (cells[2] == "no") row.symmetric = false;
    else if (cells[2] != "-") throw ParseError("symmetric must be yes, no or -", line_no, 1);
    try {
      row.map_degree = std::stoi(cells[3]);
      for (int k = 0; k < 3; ++k) row.ratio[static_cast<std::size_t>(k)] = std::stoi(cells[static_cast<std::size_t>(4 + k)]);
    } catch (const std::exception&) {
      throw ParseError("malformed degree", line_no, 1);
    }
    if (cells[7] != "default" && cells[7] != "slow") throw ParseError("tier must be default or slow", line_no, 1);
    row.slow = cells[7] == "slow";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string data_dir() {
  if (const char* env = std::getenv("TRIGIMPL_DATA_DIR"); env && *env) return env;
  return TRIGIMPL_DEFAULT_DATA_DIR;
}

std::vector<TableRow> load_table(int table) {
  const std::string path = data_dir() + "/table" + std::to_string(table) + ".txt";
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_table(ss.str(), table);
}

bool label_matches(const std::string& label, std::string_view query) { return squeeze(label) == squeeze(query); }

SurfaceParam row_surface(const TableRow& row) {
  return row.table == 1 ? revolution_surface(row_support(row)) : harmonic_surface(row_spherical(row));
}

bool row_needs_slow(const TableRow& row) {
  try {
    if (row.table == 1) require_tier(row_support(row), false);
    else require_tier(row_spherical(row), false);
  } catch (const TooLarge&) {
    return true;
  }
  return false;
}

RowOutcome run_row(const TableRow& row, const DegreeOptions& options) {
  RowOutcome out{row, std::nullopt, std::nullopt, false, {}};
  try {
    if (row.table == 1) {
      const TrigPoly p = row_support(row);
      bool sym = true;
      for (int k = 1; k <= p.degree(); ++k) sym = sym && p.b(k) == 0;
      out.symmetric = sym;
    }
    out.report = sendra_degrees(row_surface(row), options);
  } catch (const Error& e) {
    out.error = e.what();
    return out;
  }
  const DegreeReport& r = *out.report;
  out.match = r.map_degree == row.map_degree && (!row.symmetric || out.symmetric == row.symmetric);
  for (std::size_t k = 0; k < 3; ++k) out.match = out.match && r.table_ratio[k] == row.ratio[k];
  return out;
}

}  // namespace trigimpl
