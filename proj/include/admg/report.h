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

#ifndef ADMG_REPORT_H_
#define ADMG_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "admg/admg.h"
#include "admg/ci_statement.h"
#include "admg/collapsed_ordering.h"
#include "admg/gaussian.h"
#include "admg/local_markov.h"
#include "admg/verification.h"

// Text and JSON renderings of results. Text output is line-oriented and
// every text field also appears in the JSON rendering.
namespace admg::report {

using Json = nlohmann::ordered_json;

Json SetJson(const Admg& g, const VertexSet& s);
// {"x": [...], "given": [...], "indep": [...]}
Json StatementJson(const Admg& g, const CiStatement& s);

// One statement per line.
std::string StatementsText(const Admg& g,
                           std::span<const CiStatement> statements);

std::string BasisText(const Admg& g, const ReducedBasis& basis);
Json BasisJson(const Admg& g, const ReducedBasis& basis,
               const std::string& mode);

// One district per line, "{a,b}".
std::string ComponentsText(const Admg& g,
                           const std::vector<VertexSet>& components);
Json ComponentsJson(const Admg& g, const std::vector<VertexSet>& components,
                    bool mixed_directed_cycle);

// "order: h,f,a,..." followed by one line per collapse event.
std::string CollapsedText(const Admg& g, const CollapsedOrdering& c);
Json CollapsedJson(const Admg& g, const CollapsedOrdering& c);

std::string PlanText(const Admg& g, std::span<const PartialCorrTest> plan);
Json PlanJson(const Admg& g, std::span<const PartialCorrTest> plan);

std::string TestReportText(const Admg& g, const TestReport& r);
Json TestReportJson(const Admg& g, const TestReport& r);

std::string VerificationText(const Admg& g, const Verification& v);
Json VerificationJson(const Admg& g, const Verification& v);

}  // namespace admg::report

#endif  // ADMG_REPORT_H_
