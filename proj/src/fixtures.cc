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

#include "admg/fixtures.h"

#include <string>

#include "admg/errors.h"
#include "admg/graph_io.h"

namespace admg {

// Kept byte-identical to fixtures/*.admg; a test checks this.
const std::vector<Fixture>& Fixtures() {
  static const std::vector<Fixture> kFixtures = {
      {"figure1", R"admg(# Contains a mixed directed cycle: a -> c <-> d -> b <-> a
a -> c
d -> b
c <-> d
a <-> b
)admg", false},
      {"figure2", R"admg(# No mixed directed cycle; districts {a,b,c}, {d}, {e}
e -> d
d -> a
d -> b
d -> c
a <-> b
a <-> c
b <-> c
)admg", false},
      {"figure3", R"admg(# Reconstructed edge set. Chosen to reproduce the ancestral sets, Markov
# blankets and pruning step expected for this graph.
h -> f
f -> a
f -> b
i -> g
g -> c
e -> c
b -> d
a <-> b
b <-> c
d <-> e
)admg", true},
  };
  return kFixtures;
}

std::optional<Fixture> FindFixture(std::string_view name) {
  for (const Fixture& f : Fixtures()) {
    if (f.name == name) return f;
  }
  return std::nullopt;
}

Admg LoadFixture(std::string_view name) {
  const std::optional<Fixture> f = FindFixture(name);
  if (!f) throw InputError("unknown fixture '" + std::string(name) + "'");
  return ParseGraph(f->text);
}

}  // namespace admg
