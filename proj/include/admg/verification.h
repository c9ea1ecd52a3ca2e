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

#ifndef ADMG_VERIFICATION_H_
#define ADMG_VERIFICATION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "admg/admg.h"
#include "admg/ci_engine.h"
#include "admg/ci_statement.h"
#include "admg/local_markov.h"
#include "admg/ordering.h"

namespace admg {

struct DerivabilityCheck {
  CiStatement statement;
  VertexId vertex;
  bool derivable;
};

// Ordered local statements compared against a reduced basis R.
struct Verification {
  ReducedBasis reduced;
  ReducedBasis ordered;
  AxiomSet axioms;
  std::size_t closure_size = 0;
  // One entry per ordered local statement that is not already in R.
  std::vector<DerivabilityCheck> checks;

  bool AllDerivable() const;
};

// R is the reduction under `ord` (the collapsed ordering when absent), and
// the ordered local property is taken under the same ordering. Throws
// CapacityError when the graph exceeds `universe_cap`.
Verification VerifyOrderedAgainstReduced(
    const Admg& g, const std::optional<Ordering>& ord, AxiomSet axioms,
    std::size_t universe_cap = kDefaultUniverseCap,
    std::size_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace admg

#endif  // ADMG_VERIFICATION_H_
