#pragma once

// Reproduction tables. Checked tables end in the columns
// computed, reference, diff, tol, status, note; a row's status is "ok" when
// |computed - reference| <= tol, or when both sides report no bound state.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace afm::cli {

enum class TableId {
  OverlapHy,
  ObsHy,
  RatiosHy,
  OverlapHo,
  ObsHo,
  RatiosHo,
  Eckart,
  LogResults,
  ExpResults,
  FigWavefunctions,
};

std::string to_string(TableId id);
std::optional<TableId> parse_table_id(std::string_view name);
const std::vector<TableId>& all_tables();

using Cell = std::variant<std::monostate, std::string, long long, double>;

struct Table {
  TableId id;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool checked() const;
  std::size_t column(std::string_view name) const;
  // Rows whose status is not "ok"; zero for unchecked tables.
  std::size_t failures() const;
};

Table build_table(TableId id);

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view name);

// Reals are printed with 4 significant digits; missing values as "-".
std::string format_real(double x);

void write_table(std::ostream& out, const Table& t, Format f);

} // namespace afm::cli
