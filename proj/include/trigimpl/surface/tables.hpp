#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigimpl/surface/surface.hpp"

namespace trigimpl {

/// One printed row of a partial-degree table.
struct TableRow {
  /// 1: surfaces of revolution, 2: spherical harmonics.
  int table = 1;
  std::string label;
  /// Support-file text, one assignment per line.
  std::string input;
  std::optional<bool> symmetric;
  int map_degree = 0;
  std::array<int, 3> ratio{};
  bool slow = false;
};

/// Rows of a golden table file:
///   label | assignments separated by ';' | yes/no/- | deg P | x | y | z | default/slow
/// Throws ParseError.
std::vector<TableRow> parse_table(std::string_view text, int table);
/// $TRIGIMPL_DATA_DIR, or the data directory of the source tree.
std::string data_dir();
/// data_dir()/table<N>.txt.
std::vector<TableRow> load_table(int table);

/// Labels compare without whitespace; "theta" stands for θ.
bool label_matches(const std::string& label, std::string_view query);

/// Parametrization of the row's surface.
SurfaceParam row_surface(const TableRow& row);
/// Whether the row's input needs the slow tier.
bool row_needs_slow(const TableRow& row);

struct RowOutcome {
  TableRow row;
  std::optional<DegreeReport> report;
  std::optional<bool> symmetric;
  /// Every computed cell equals the printed one.
  bool match = false;
  std::string error;
};

RowOutcome run_row(const TableRow& row, const DegreeOptions& options = {});

}  // namespace trigimpl
