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

#ifndef ADMG_CI_STATEMENT_H_
#define ADMG_CI_STATEMENT_H_

#include <string>

#include "admg/admg.h"

namespace admg {

// I(X, Z, Y): X is conditionally independent of Y given Z.
//
// The statement keeps the orientation it was built with (so a local
// statement reads I({x}, blanket, rest)), but equality and ordering treat
// I(X, Z, Y) and I(Y, Z, X) as the same statement.
class CiStatement {
 public:
  // Throws InputError unless the sets are pairwise disjoint, belong to one
  // universe, and X, Y are non-empty.
  CiStatement(VertexSet x, VertexSet z, VertexSet y);

  const VertexSet& x() const { return x_; }
  const VertexSet& z() const { return z_; }
  const VertexSet& y() const { return y_; }

  CiStatement Swapped() const { return CiStatement(y_, z_, x_, Unchecked{}); }
  // The orientation whose X side is lexicographically smaller.
  CiStatement Canonical() const { return y_ < x_ ? Swapped() : *this; }

  friend bool operator==(const CiStatement& a, const CiStatement& b);
  friend bool operator<(const CiStatement& a, const CiStatement& b);

 private:
  struct Unchecked {};
  CiStatement(VertexSet x, VertexSet z, VertexSet y, Unchecked)
      : x_(std::move(x)), z_(std::move(z)), y_(std::move(y)) {}

  VertexSet x_;
  VertexSet z_;
  VertexSet y_;
};

// "I({c} ; {e,g} ; {a,f,h,i})"
std::string FormatStatement(const Admg& g, const CiStatement& s);

}  // namespace admg

#endif  // ADMG_CI_STATEMENT_H_
