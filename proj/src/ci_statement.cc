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

#include "admg/ci_statement.h"

#include <tuple>
#include <utility>

namespace admg {

CiStatement::CiStatement(VertexSet x, VertexSet z, VertexSet y)
    : x_(std::move(x)), z_(std::move(z)), y_(std::move(y)) {
  if (x_.universe_size() != y_.universe_size() ||
      x_.universe_size() != z_.universe_size()) {
    throw InputError("statement sets come from different graphs");
  }
  if (x_.empty() || y_.empty()) {
    throw InputError("statement sides must be non-empty");
  }
  if (x_.Intersects(y_) || x_.Intersects(z_) || y_.Intersects(z_)) {
    throw InputError("statement sets must be pairwise disjoint");
  }
}

bool operator==(const CiStatement& a, const CiStatement& b) {
  if (!(a.z_ == b.z_)) return false;
  return (a.x_ == b.x_ && a.y_ == b.y_) || (a.x_ == b.y_ && a.y_ == b.x_);
}

bool operator<(const CiStatement& a, const CiStatement& b) {
  const CiStatement ca = a.Canonical();
  const CiStatement cb = b.Canonical();
  return std::tie(ca.x_, ca.z_, ca.y_) < std::tie(cb.x_, cb.z_, cb.y_);
}

std::string FormatStatement(const Admg& g, const CiStatement& s) {
  return "I(" + g.Format(s.x()) + " ; " + g.Format(s.z()) + " ; " +
         g.Format(s.y()) + ")";
}

}  // namespace admg
