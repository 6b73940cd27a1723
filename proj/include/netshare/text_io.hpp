#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace netshare {

/// 17 significant digits: enough to round-trip any double exactly.
std::string format_double(double v);

/// Shortest %g form, for human-facing parameter echoes inside labels.
std::string format_short(double v);

/// A column-ordered result table with a CSV rendering (header row, doubles
/// at 17 significant digits) and a JSON mirror (array of row objects).
class Table {
public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  /// Cells must match the column count; use nullptr/json() for blanks.
  void add_row(std::vector<nlohmann::ordered_json> cells);

  std::string to_csv() const;
  std::string to_json() const;

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }

private:
  std::vector<std::string> columns_;
  std::vector<std::vector<nlohmann::ordered_json>> rows_;
};

/// Writes to the path, or to stdout when the path is empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace netshare
