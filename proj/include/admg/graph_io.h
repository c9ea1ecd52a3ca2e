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

#ifndef ADMG_GRAPH_IO_H_
#define ADMG_GRAPH_IO_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "admg/admg.h"

namespace admg {

// Line-oriented graph text format:
//
//   # comment
//   x -> y      directed edge
//   x <-> y     bi-directed edge
//   z           isolated vertex declaration
//
// Whitespace around tokens is ignored, as are blank lines and anything after
// '#'. Vertex names are [A-Za-z0-9_]+.
class ParseError : public InputError {
 public:
  enum class Kind {
    kSyntax,
    kDuplicateEdge,
    kSelfLoop,
    kDirectedCycle,
  };

  ParseError(Kind kind, std::size_t line, std::size_t column,
             const std::string& message);

  Kind kind() const { return kind_; }
  // 1-based; 0 when the error is not tied to a single line (cycles).
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

Admg ParseGraph(std::string_view text);
// Throws InputError when the file cannot be read.
Admg ReadGraphFile(const std::string& path);

// Canonical text: isolated vertices, then directed edges, then bi-directed
// edges, each block sorted. ParseGraph(FormatGraph(g)) == g.
std::string FormatGraph(const Admg& g);

}  // namespace admg

#endif  // ADMG_GRAPH_IO_H_
