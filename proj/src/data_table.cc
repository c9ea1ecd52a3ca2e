// Copyright 2026 The admg-local Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "admg/data_table.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "admg/errors.h"

namespace admg {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::optional<std::size_t> DataTable::ColumnIndex(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

DataTable ParseCsv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw InputError("CSV input is empty; a header is required");

  DataTable table;
  for (std::string_view field : SplitFields(lines[0])) {
    if (field.empty()) throw InputError("CSV header has an empty column name");
    table.columns.emplace_back(field);
  }
  const std::size_t width = table.columns.size();
  table.values.resize(static_cast<Eigen::Index>(lines.size() - 1),
                      static_cast<Eigen::Index>(width));
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const auto fields = SplitFields(lines[row]);
    if (fields.size() != width) {
      throw InputError("CSV line " + std::to_string(row + 1) + " has " +
                       std::to_string(fields.size()) + " fields; expected " +
                       std::to_string(width));
    }
    for (std::size_t col = 0; col < width; ++col) {
      double value = 0;
      const auto [ptr, ec] = std::from_chars(
          fields[col].data(), fields[col].data() + fields[col].size(), value);
      if (ec != std::errc() || ptr != fields[col].data() + fields[col].size()) {
        throw InputError("CSV line " + std::to_string(row + 1) + ", column " +
                         table.columns[col] + ": '" + std::string(fields[col]) +
                         "' is not a number");
      }
      table.values(static_cast<Eigen::Index>(row - 1),
                   static_cast<Eigen::Index>(col)) = value;
    }
  }
  return table;
}

DataTable ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read data file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseCsv(buffer.str());
}

void WriteCsv(std::ostream& out, const DataTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  char buffer[64];
  for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
      const auto [end, ec] =
          std::to_chars(buffer, buffer + sizeof(buffer), table.values(r, c));
      if (c) out << ',';
      out.write(buffer, end - buffer);
    }
    out << '\n';
  }
}

}  // namespace admg
