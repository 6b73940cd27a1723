#include "netshare/text_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace netshare {

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string format_short(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%g", v);
  return buffer;
}

void Table::add_row(std::vector<nlohmann::ordered_json> cells) {
  if (cells.size() != columns_.size()) {
    throw std::invalid_argument("Table::add_row: cell count does not match columns");
  }
  rows_.push_back(std::move(cells));
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c > 0) out += ',';
    out += columns_[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      const auto& cell = row[c];
      if (cell.is_null()) {
        // blank field
      } else if (cell.is_string()) {
        out += cell.get<std::string>();
      } else if (cell.is_number_float()) {
        out += format_double(cell.get<double>());
      } else {
        out += cell.dump();
      }
    }
    out += '\n';
  }
  return out;
}

std::string Table::to_json() const {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      object[columns_[c]] = row[c];
    }
    array.push_back(std::move(object));
  }
  return array.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << content;
}

}  // namespace netshare
