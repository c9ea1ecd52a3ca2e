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

#ifndef ADMG_TESTS_TESTING_PROPERTIES_H_
#define ADMG_TESTS_TESTING_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "admg/admg.h"

// Randomized properties shared by the unit tests and the acceptance suite.
// Each check collects human-readable failures instead of stopping.
namespace admg::testing {

struct PropertyOutcome {
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Fast m-separation equals the path-enumeration oracle for every singleton
// query and every conditioning set.
PropertyOutcome CheckMsepAgreesWithBruteForce(const std::vector<Admg>& graphs);

// Ordered (collapsed and one random consistent ordering), reduced (when
// applicable) and auto statements all hold as m-separations.
PropertyOutcome CheckStatementsAreSeparations(const std::vector<Admg>& graphs,
                                              std::uint64_t seed);

// For graphs without mixed directed cycles, the closure of the reduced
// statements under composition contains the ordered local statements.
PropertyOutcome CheckReducedDerivesOrdered(const std::vector<Admg>& graphs,
                                           std::uint64_t seed);

// The reduction never invokes more statements than the ordered property
// under the same ordering.
PropertyOutcome CheckReductionNoLarger(const std::vector<Admg>& graphs,
                                       std::uint64_t seed);

// For bi-directed graphs the reduced statements are exactly
// I({x}, {}, V \ ({x} u sp(x))) over x, vacuous ones dropped.
PropertyOutcome CheckBidirectedFamily(const std::vector<Admg>& graphs);

// For any graph, the closure of the reduction under composition contains
// the ordered local statements under the same ordering.
PropertyOutcome CheckReductionDerivesOrdered(const std::vector<Admg>& graphs);

// The graph families the suites draw from, deterministic in seed.
std::vector<Admg> MixedSuite(std::uint64_t seed, std::size_t count,
                             std::size_t max_n);
std::vector<Admg> CycleFreeSuite(std::uint64_t seed, std::size_t count,
                                 std::size_t max_n);
std::vector<Admg> BidirectedSuite(std::uint64_t seed, std::size_t count,
                                  std::size_t max_n);

}  // namespace admg::testing

#endif  // ADMG_TESTS_TESTING_PROPERTIES_H_
