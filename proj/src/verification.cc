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

#include "admg/verification.h"

#include <algorithm>

namespace admg {

bool Verification::AllDerivable() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const DerivabilityCheck& c) { return c.derivable; });
}

Verification VerifyOrderedAgainstReduced(const Admg& g,
                                         const std::optional<Ordering>& ord,
                                         AxiomSet axioms,
                                         std::size_t universe_cap,
                                         std::size_t enumeration_cap) {
  const StatementUniverse universe(g.size(), universe_cap);
  Verification v{
      ord ? ReduceLocalMarkov(g, *ord, enumeration_cap)
          : ReduceLocalMarkov(g, enumeration_cap),
      {}, axioms, 0, {}};
  v.ordered = OrderedLocalBasis(g, v.reduced.ordering, enumeration_cap);

  const std::vector<CiStatement> seed = v.reduced.Statements();
  const StatementClosure closure = Closure(universe, seed, axioms);
  v.closure_size = closure.size();
  for (const BasisEntry& e : v.ordered.statements) {
    if (std::find(seed.begin(), seed.end(), e.statement) != seed.end()) {
      continue;
    }
    v.checks.push_back({e.statement, e.vertex, closure.Contains(e.statement)});
  }
  return v;
}

}  // namespace admg
