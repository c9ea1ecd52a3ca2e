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

#include "admg/report.h"

#include <cstdio>
#include <sstream>

namespace admg::report {
namespace {

std::string Number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string JoinNames(const Admg& g, std::span<const VertexId> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += g.name(ids[i]);
  }
  return out;
}

Json EntryJson(const Admg& g, const BasisEntry& e) {
  Json j = StatementJson(g, e.statement);
  j["provenance"] = ProvenanceName(e.provenance);
  j["vertex"] = g.name(e.vertex);
  j["implied_by"] = e.implied_by ? Json(*e.implied_by) : Json(nullptr);
  if (e.ancestral_set) j["ancestral_set"] = SetJson(g, *e.ancestral_set);
  return j;
}

}  // namespace

Json SetJson(const Admg& g, const VertexSet& s) {
  Json out = Json::array();
  for (VertexId v : s) out.push_back(g.name(v));
  return out;
}

Json StatementJson(const Admg& g, const CiStatement& s) {
  Json j;
  j["x"] = SetJson(g, s.x());
  j["given"] = SetJson(g, s.z());
  j["indep"] = SetJson(g, s.y());
  return j;
}

std::string StatementsText(const Admg& g,
                           std::span<const CiStatement> statements) {
  std::string out;
  for (const CiStatement& s : statements) out += FormatStatement(g, s) + "\n";
  return out;
}

std::string BasisText(const Admg& g, const ReducedBasis& basis) {
  std::string out;
  for (const BasisEntry& e : basis.statements) {
    out += FormatStatement(g, e.statement) + "\n";
  }
  return out;
}

Json BasisJson(const Admg& g, const ReducedBasis& basis,
               const std::string& mode) {
  Json j;
  j["mode"] = mode;
  j["ordering"] = basis.ordering.Names(g);
  j["statements"] = Json::array();
  for (const BasisEntry& e : basis.statements) {
    j["statements"].push_back(EntryJson(g, e));
  }
  j["pruned"] = Json::array();
  for (const BasisEntry& e : basis.pruned) j["pruned"].push_back(EntryJson(g, e));
  j["vacuous"] = Json::array();
  for (const VacuousEntry& v : basis.vacuous) {
    Json entry;
    entry["vertex"] = g.name(v.vertex);
    entry["given"] = SetJson(g, v.given);
    entry["provenance"] = ProvenanceName(v.provenance);
    j["vacuous"].push_back(std::move(entry));
  }
  j["invoked_count"] = basis.InvokedCount();
  j["duplicates_dropped"] = basis.duplicates_dropped;
  return j;
}

std::string ComponentsText(const Admg& g,
                           const std::vector<VertexSet>& components) {
  std::string out;
  for (const VertexSet& c : components) out += g.Format(c) + "\n";
  return out;
}

Json ComponentsJson(const Admg& g, const std::vector<VertexSet>& components,
                    bool mixed_directed_cycle) {
  Json j;
  j["components"] = Json::array();
  for (const VertexSet& c : components) j["components"].push_back(SetJson(g, c));
  j["mixed_directed_cycle"] = mixed_directed_cycle;
  return j;
}

std::string CollapsedText(const Admg& g, const CollapsedOrdering& c) {
  std::string out =
      "order: " + JoinNames(g, c.ordering.sequence()) + "\n";
  for (const CollapseEvent& e : c.events) {
    out += e.kind == CollapseEvent::Kind::kMerge ? "merge " : "remove ";
    out += g.name(e.u) + " <-> " + g.name(e.v) + "\n";
  }
  return out;
}

Json CollapsedJson(const Admg& g, const CollapsedOrdering& c) {
  Json j;
  j["ordering"] = c.ordering.Names(g);
  j["blocks"] = Json::array();
  for (const VertexSet& b : c.blocks) j["blocks"].push_back(SetJson(g, b));
  j["events"] = Json::array();
  for (const CollapseEvent& e : c.events) {
    Json event;
    event["kind"] = e.kind == CollapseEvent::Kind::kMerge ? "merge" : "remove";
    event["edge"] = {g.name(e.u), g.name(e.v)};
    event["first_block"] = SetJson(g, e.first_block);
    event["second_block"] = SetJson(g, e.second_block);
    j["events"].push_back(std::move(event));
  }
  return j;
}

std::string PlanText(const Admg& g, std::span<const PartialCorrTest> plan) {
  std::string out;
  for (const PartialCorrTest& t : plan) out += FormatTest(g, t) + "\n";
  return out;
}

Json PlanJson(const Admg& g, std::span<const PartialCorrTest> plan) {
  Json j;
  j["tests"] = Json::array();
  for (const PartialCorrTest& t : plan) {
    Json test;
    test["x"] = g.name(t.x);
    test["y"] = g.name(t.y);
    test["given"] = SetJson(g, t.given);
    test["source_statement"] = t.source_statement;
    test["text"] = FormatTest(g, t);
    j["tests"].push_back(std::move(test));
  }
  return j;
}

std::string TestReportText(const Admg& g, const TestReport& r) {
  std::ostringstream out;
  for (const TestResult& t : r.results) {
    out << FormatTest(g, t.test);
    if (!t.error.empty()) {
      out << "  error: " << t.error << '\n';
      continue;
    }
    out << "  r=" << Number(*t.r) << " z=" << Number(*t.z)
        << " p=" << Number(*t.p_value) << (t.reject ? " reject" : " accept")
        << '\n';
  }
  out << (r.Passed() ? "pass" : "fail") << ": " << r.Rejections() << " of "
      << r.results.size() << " rejected, " << r.Errors() << " errors (n="
      << r.sample_size << ", fisher-z, alpha=" << Number(r.alpha) << ", "
      << CorrectionName(r.correction) << ", threshold=" << Number(r.threshold)
      << ")\n";
  return out.str();
}

Json TestReportJson(const Admg& g, const TestReport& r) {
  Json j;
  j["statistic"] = "fisher-z";
  j["correction"] = CorrectionName(r.correction);
  j["alpha"] = r.alpha;
  j["threshold"] = r.threshold;
  j["sample_size"] = r.sample_size;
  j["tests"] = Json::array();
  for (const TestResult& t : r.results) {
    Json test;
    test["x"] = g.name(t.test.x);
    test["y"] = g.name(t.test.y);
    test["given"] = SetJson(g, t.test.given);
    test["text"] = FormatTest(g, t.test);
    test["r"] = t.r ? Json(*t.r) : Json(nullptr);
    test["z"] = t.z ? Json(*t.z) : Json(nullptr);
    test["p_value"] = t.p_value ? Json(*t.p_value) : Json(nullptr);
    test["reject"] = t.reject;
    test["error"] = t.error.empty() ? Json(nullptr) : Json(t.error);
    j["tests"].push_back(std::move(test));
  }
  j["rejections"] = r.Rejections();
  j["errors"] = r.Errors();
  j["pass"] = r.Passed();
  return j;
}

std::string VerificationText(const Admg& g, const Verification& v) {
  std::string out = "order: " + JoinNames(g, v.reduced.ordering.sequence()) +
                    "\n";
  out += "reduced: " + std::to_string(v.reduced.statements.size()) +
         " statements; ordered: " + std::to_string(v.ordered.statements.size()) +
         " statements; axioms: " +
         (v.axioms.composition ? "composition" : "semigraphoid") + "\n";
  for (const DerivabilityCheck& c : v.checks) {
    out += FormatStatement(g, c.statement) +
           (c.derivable ? "  derivable\n" : "  not derivable\n");
  }
  out += v.AllDerivable() ? "all derivable\n" : "some not derivable\n";
  return out;
}

Json VerificationJson(const Admg& g, const Verification& v) {
  Json j;
  j["ordering"] = v.reduced.ordering.Names(g);
  j["axioms"] = v.axioms.composition ? "composition" : "semigraphoid";
  j["reduced_count"] = v.reduced.statements.size();
  j["ordered_count"] = v.ordered.statements.size();
  j["closure_size"] = v.closure_size;
  j["checks"] = Json::array();
  for (const DerivabilityCheck& c : v.checks) {
    Json check = StatementJson(g, c.statement);
    check["vertex"] = g.name(c.vertex);
    check["derivable"] = c.derivable;
    j["checks"].push_back(std::move(check));
  }
  j["all_derivable"] = v.AllDerivable();
  return j;
}

}  // namespace admg::report
