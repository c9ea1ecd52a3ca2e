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

#ifndef ADMG_DATA_TABLE_H_
#define ADMG_DATA_TABLE_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace admg {

// Observations in rows, one named column per variable.
struct DataTable {
  std::vector<std::string> columns;
  Eigen::MatrixXd values;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::optional<std::size_t> ColumnIndex(std::string_view name) const;
};

// Comma-separated, header row required, decimal floats. Throws InputError
// with the offending line on malformed input.
DataTable ParseCsv(std::string_view text);
DataTable ReadCsv(const std::string& path);
// Full round-trip precision.
void WriteCsv(std::ostream& out, const DataTable& table);

}  // namespace admg

#endif  // ADMG_DATA_TABLE_H_
