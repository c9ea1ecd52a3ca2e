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

#ifndef ADMG_FIXTURES_H_
#define ADMG_FIXTURES_H_

#include <optional>
#include <string_view>
#include <vector>

#include "admg/admg.h"

namespace admg {

// Bundled example graphs, available to the CLI by name.
struct Fixture {
  std::string_view name;
  std::string_view text;
  // True when the edge set was reconstructed from expected results rather
  // than transcribed from a drawing.
  bool reconstructed;
};

const std::vector<Fixture>& Fixtures();
std::optional<Fixture> FindFixture(std::string_view name);
// Throws InputError for unknown names.
Admg LoadFixture(std::string_view name);

}  // namespace admg

#endif  // ADMG_FIXTURES_H_
