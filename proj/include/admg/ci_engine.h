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

#ifndef ADMG_CI_ENGINE_H_
#define ADMG_CI_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "admg/ci_statement.h"

namespace admg {

inline constexpr std::size_t kDefaultUniverseCap = 12;

// Symmetry, decomposition, weak union and contraction are always applied;
// composition is optional.
struct AxiomSet {
  bool composition = false;

  static AxiomSet SemiGraphoid() { return {false}; }
  static AxiomSet WithComposition() { return {true}; }
};

enum class ClosureSchedule {
  // Semi-naive: each new statement is combined with everything derived so
  // far, once.
  kWorklist,
  // One rule at a time over the whole set, repeated to a fixpoint.
  kRoundRobin,
};

// All statements over a ground set of n vertices. A statement is a base-4
// word (digit per vertex: 0 absent, 1 in X, 2 in Z, 3 in Y); a statement and
// its X/Y swap share the smaller of the two words as their slot.
class StatementUniverse {
 public:
  // Throws CapacityError when ground_size exceeds cap (cap itself may not
  // exceed 15).
  explicit StatementUniverse(std::size_t ground_size,
                             std::size_t cap = kDefaultUniverseCap);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t slot_count() const { return std::size_t{1} << (2 * ground_size_); }

  std::uint32_t Slot(const CiStatement& s) const;
  // Canonical orientation.
  CiStatement Decode(std::uint32_t slot) const;

 private:
  std::size_t ground_size_;
};

// A set of statements closed under some axioms.
class StatementClosure {
 public:
  StatementClosure(const StatementUniverse& universe,
                   std::vector<std::uint64_t> bits, std::size_t count)
      : universe_(universe), bits_(std::move(bits)), count_(count) {}

  bool Contains(const CiStatement& s) const;
  std::size_t size() const { return count_; }
  // Canonical orientations, in slot order.
  std::vector<CiStatement> Statements() const;

  friend bool operator==(const StatementClosure& a, const StatementClosure& b) {
    return a.bits_ == b.bits_;
  }

 private:
  StatementUniverse universe_;
  std::vector<std::uint64_t> bits_;
  std::size_t count_;
};

// Least set containing `seed` closed under `axioms`.
StatementClosure Closure(const StatementUniverse& universe,
                         std::span<const CiStatement> seed, AxiomSet axioms,
                         ClosureSchedule schedule = ClosureSchedule::kWorklist);

// Whether `target` is in the closure. Stops as soon as it is derived.
bool Implies(const StatementUniverse& universe,
             std::span<const CiStatement> seed, const CiStatement& target,
             AxiomSet axioms);

}  // namespace admg

#endif  // ADMG_CI_ENGINE_H_
