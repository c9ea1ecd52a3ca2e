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

#include "admg/graph_io.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace admg {
namespace {

bool IsNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::string Where(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " +
         std::to_string(column) + ": ";
}

// Splits one comment-stripped line into names and arrows.
std::vector<Token> Tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (IsSpace(line[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (IsNameChar(line[i])) {
      while (i < line.size() && IsNameChar(line[i])) ++i;
    } else if (line.substr(i, 3) == "<->") {
      i += 3;
    } else if (line.substr(i, 2) == "->") {
      i += 2;
    } else {
      throw ParseError(ParseError::Kind::kSyntax, line_no, start + 1,
                       Where(line_no, start + 1) + "unexpected character '" +
                           std::string(1, line[i]) + "'");
    }
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

bool IsName(const Token& t) { return IsNameChar(t.text.front()); }

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : InputError(message), kind_(kind), line_(line), column_(column) {}

Admg ParseGraph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Admg::NamedEdge> directed;
  std::vector<Admg::NamedEdge> bidirected;
  std::set<std::pair<std::string, std::string>> seen_directed;
  std::set<std::pair<std::string, std::string>> seen_bidirected;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<Token> tokens = Tokenize(line, line_no);
    if (tokens.empty()) continue;

    if (tokens.size() == 1) {
      if (!IsName(tokens[0])) {
        throw ParseError(ParseError::Kind::kSyntax, line_no, tokens[0].column,
                         Where(line_no, tokens[0].column) +
                             "expected a vertex name");
      }
      vertices.push_back(tokens[0].text);
      continue;
    }
    if (tokens.size() != 3 || !IsName(tokens[0]) || IsName(tokens[1]) ||
        !IsName(tokens[2])) {
      const Token& bad = tokens.size() > 3 ? tokens[3] : tokens[1];
      throw ParseError(ParseError::Kind::kSyntax, line_no, bad.column,
                       Where(line_no, bad.column) +
                           "expected 'x -> y', 'x <-> y' or 'x'");
    }
    const std::string& u = tokens[0].text;
    const std::string& v = tokens[2].text;
    const bool is_directed = tokens[1].text == "->";
    const char* arrow = is_directed ? " -> " : " <-> ";
    if (u == v) {
      throw ParseError(ParseError::Kind::kSelfLoop, line_no, tokens[0].column,
                       Where(line_no, tokens[0].column) + "self-loop " + u +
                           arrow + v);
    }
    const bool fresh =
        is_directed ? seen_directed.emplace(u, v).second
                    : seen_bidirected.emplace(std::min(u, v), std::max(u, v))
                          .second;
    if (!fresh) {
      throw ParseError(ParseError::Kind::kDuplicateEdge, line_no,
                       tokens[0].column,
                       Where(line_no, tokens[0].column) + "duplicate edge " +
                           u + arrow + v);
    }
    (is_directed ? directed : bidirected).emplace_back(u, v);
  }

  try {
    return Admg::FromEdges(std::move(vertices), directed, bidirected);
  } catch (const GraphError& e) {
    if (e.kind() == GraphError::Kind::kDirectedCycle) {
      throw ParseError(ParseError::Kind::kDirectedCycle, 0, 0, e.what());
    }
    throw ParseError(ParseError::Kind::kSyntax, 0, 0, e.what());
  }
}

Admg ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

std::string FormatGraph(const Admg& g) {
  std::string out;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.ParentsOf(v).empty() && g.ChildrenOf(v).empty() &&
        g.SpousesOf(v).empty()) {
      out += g.name(v) + "\n";
    }
  }
  for (const auto& [tail, head] : g.directed_edges()) {
    out += g.name(tail) + " -> " + g.name(head) + "\n";
  }
  for (const auto& [u, v] : g.bidirected_edges()) {
    out += g.name(u) + " <-> " + g.name(v) + "\n";
  }
  return out;
}

}  // namespace admg
