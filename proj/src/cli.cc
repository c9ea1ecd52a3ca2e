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

#include "admg/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"

#include "admg/admg.h"
#include "admg/collapsed_ordering.h"
#include "admg/data_table.h"
#include "admg/errors.h"
#include "admg/fixtures.h"
#include "admg/gaussian.h"
#include "admg/graph_io.h"
#include "admg/local_markov.h"
#include "admg/msep.h"
#include "admg/report.h"
#include "admg/verification.h"

namespace admg::cli {
namespace {

constexpr char kGraphHelp[] =
    "Graph file (lines 'x -> y', 'x <-> y', 'x', '#' comments) or a bundled "
    "fixture: figure1, figure2, figure3";

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::optional<std::size_t> cap;
};

Admg LoadGraph(const std::string& source) {
  if (std::filesystem::exists(source)) return ReadGraphFile(source);
  if (FindFixture(source)) return LoadFixture(source);
  throw InputError("cannot read graph '" + source +
                   "': no such file or fixture");
}

void Emit(std::ostream& out, const GlobalOptions& global,
          const std::string& text, const report::Json& json) {
  if (global.format == "json") {
    out << json.dump(2) << '\n';
  } else {
    out << text;
  }
}

std::optional<Ordering> ParseOrder(const Admg& g,
                                   const std::vector<std::string>& names) {
  if (names.empty()) return std::nullopt;
  return Ordering::FromNames(g, names);
}

// The statements a mode produces, with the mode name used in reports.
ReducedBasis BasisFor(const Admg& g, const std::string& mode,
                      const std::vector<std::string>& order_names) {
  const std::optional<Ordering> ord = ParseOrder(g, order_names);
  if (mode == "reduced") {
    if (ord) {
      throw InputError("--order does not apply to --mode reduced, which "
                       "always uses the collapsed ordering; drop --order or "
                       "use --mode auto");
    }
    return ReducedLocalBasis(g);
  }
  if (mode == "ordered") {
    return OrderedLocalBasis(g, ord ? *ord : BuildCollapsedOrdering(g).ordering);
  }
  return ord ? ReduceLocalMarkov(g, *ord) : ReduceLocalMarkov(g);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(std::vector<std::string> args);

 private:
  void AddComponents(CLI::App& app);
  void AddMsep(CLI::App& app);
  void AddOrder(CLI::App& app);
  void AddAnalyze(CLI::App& app);
  void AddVerify(CLI::App& app);
  void AddSemTests(CLI::App& app);
  void AddSimulate(CLI::App& app);
  void AddSemCheck(CLI::App& app);

  std::ostream& out_;
  std::ostream& err_;
  GlobalOptions global_;
  int status_ = kExitSuccess;

  std::string graph_;
  std::string data_path_;
  std::string out_path_;
  std::string mode_ = "auto";
  std::string axioms_ = "composition";
  std::string correction_ = "bonferroni";
  std::vector<std::string> order_;
  std::vector<std::string> x_;
  std::vector<std::string> y_;
  std::vector<std::string> given_;
  bool brute_force_ = false;
  std::size_t samples_ = 1000;
  std::optional<std::uint64_t> param_seed_;
  double alpha_ = 0.05;
};

CLI::App* AddGraphCommand(CLI::App& app, const std::string& name,
                          const std::string& description, std::string& graph) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->fallthrough();
  sub->add_option("graph", graph, kGraphHelp)->required();
  return sub;
}

void Runner::AddComponents(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "components",
      "List the districts (c-components), one per line, and whether the graph "
      "has a mixed directed cycle",
      graph_);
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const std::vector<VertexSet> components = CComponents(g);
    const bool cycle = HasMixedDirectedCycle(g);
    Emit(out_, global_,
         report::ComponentsText(g, components) +
             "mixed directed cycle: " + (cycle ? "yes" : "no") + "\n",
         report::ComponentsJson(g, components, cycle));
  });
}

void Runner::AddMsep(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "msep",
      "Decide whether X and Y are m-separated given Z; prints 'separated' "
      "(exit 0) or 'connected' (exit 1)",
      graph_);
  sub->add_option("--x", x_, "Comma list of vertices")
      ->delimiter(',')
      ->required();
  sub->add_option("--y", y_, "Comma list of vertices")
      ->delimiter(',')
      ->required();
  sub->add_option("--given", given_, "Comma list of conditioning vertices")
      ->delimiter(',');
  sub->add_flag("--brute-force", brute_force_,
                "Use the path-enumeration reference implementation");
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const SeparationQuery q{g.SetOf(x_), g.SetOf(y_), g.SetOf(given_)};
    const bool separated =
        brute_force_
            ? MSeparatedBruteForce(
                  g, q, global_.cap.value_or(kDefaultBruteForceCap))
            : MSeparated(g, q);
    report::Json j;
    j["x"] = report::SetJson(g, q.x);
    j["y"] = report::SetJson(g, q.y);
    j["given"] = report::SetJson(g, q.z);
    j["separated"] = separated;
    Emit(out_, global_, separated ? "separated\n" : "connected\n", j);
    if (!separated) status_ = kExitFailure;
  });
}

void Runner::AddOrder(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "order",
      "Build the collapsed ordering: print it, then each merged or removed "
      "bi-directed edge",
      graph_);
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const CollapsedOrdering c = BuildCollapsedOrdering(g);
    Emit(out_, global_, report::CollapsedText(g, c),
         report::CollapsedJson(g, c));
  });
}

void Runner::AddAnalyze(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "analyze",
      "Print local Markov statements, one per line as "
      "'I({x} ; {given} ; {indep})'. Modes: ordered (all maximal ancestral "
      "sets), reduced (one per vertex; graphs without mixed directed cycles), "
      "auto (reduction for any graph)",
      graph_);
  sub->add_option("--mode", mode_, "ordered, reduced or auto")
      ->check(CLI::IsMember({"ordered", "reduced", "auto"}));
  sub->add_option("--order", order_,
                  "Comma list fixing a consistent vertex ordering")
      ->delimiter(',');
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const ReducedBasis basis = BasisFor(g, mode_, order_);
    Emit(out_, global_, report::BasisText(g, basis),
         report::BasisJson(g, basis, mode_));
  });
}

void Runner::AddVerify(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "verify",
      "For each ordered local statement missing from the reduced set R, "
      "report whether the axioms derive it from R; exit 0 iff all are "
      "derivable",
      graph_);
  sub->add_option("--mode", mode_, "ordered-vs-reduced")
      ->check(CLI::IsMember({"ordered-vs-reduced"}));
  sub->add_option("--axioms", axioms_, "semigraphoid or composition")
      ->check(CLI::IsMember({"semigraphoid", "composition"}));
  sub->add_option("--order", order_,
                  "Comma list fixing a consistent vertex ordering")
      ->delimiter(',');
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const AxiomSet axioms = axioms_ == "composition"
                                ? AxiomSet::WithComposition()
                                : AxiomSet::SemiGraphoid();
    const Verification v = VerifyOrderedAgainstReduced(
        g, ParseOrder(g, order_), axioms,
        global_.cap.value_or(kDefaultUniverseCap));
    Emit(out_, global_, report::VerificationText(g, v),
         report::VerificationJson(g, v));
    if (!v.AllDerivable()) status_ = kExitFailure;
  });
}

void Runner::AddSemTests(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "sem-tests",
      "Print the vanishing partial correlations to test, one per line as "
      "'rho(a,e | d) = 0'",
      graph_);
  sub->add_option("--mode", mode_, "ordered, reduced or auto")
      ->check(CLI::IsMember({"ordered", "reduced", "auto"}));
  sub->add_option("--order", order_,
                  "Comma list fixing a consistent vertex ordering")
      ->delimiter(',');
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const std::vector<PartialCorrTest> plan =
        TestPlan(BasisFor(g, mode_, order_));
    Emit(out_, global_, report::PlanText(g, plan), report::PlanJson(g, plan));
  });
}

void Runner::AddSimulate(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "simulate",
      "Draw random SEM parameters and write simulated data as CSV with a "
      "header row of vertex names",
      graph_);
  sub->add_option("--n", samples_, "Number of rows")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", out_path_, "Output CSV path (default stdout)");
  sub->add_option("--param-seed", param_seed_,
                  "Seed for the parameters (default: --seed)");
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const SemParameters p =
        RandomParameters(g, param_seed_.value_or(global_.seed));
    const DataTable data = Simulate(g, p, samples_, global_.seed);
    if (out_path_.empty()) {
      WriteCsv(out_, data);
      return;
    }
    std::ofstream file(out_path_);
    if (!file) throw InputError("cannot write '" + out_path_ + "'");
    WriteCsv(file, data);
  });
}

void Runner::AddSemCheck(CLI::App& app) {
  CLI::App* sub = AddGraphCommand(
      app, "sem-check",
      "Fisher z test of each planned vanishing partial correlation on CSV "
      "data; exit 0 iff nothing is rejected",
      graph_);
  sub->add_option("data", data_path_, "CSV file, header row of vertex names")
      ->required();
  sub->add_option("--alpha", alpha_, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--mode", mode_, "ordered, reduced or auto")
      ->check(CLI::IsMember({"ordered", "reduced", "auto"}));
  sub->add_option("--order", order_,
                  "Comma list fixing a consistent vertex ordering")
      ->delimiter(',');
  sub->add_option("--correction", correction_,
                  "Multiple-testing correction: bonferroni or none")
      ->check(CLI::IsMember({"bonferroni", "none"}));
  sub->callback([this] {
    const Admg g = LoadGraph(graph_);
    const std::vector<PartialCorrTest> plan =
        TestPlan(BasisFor(g, mode_, order_));
    const TestReport r =
        RunTests(g, ReadCsv(data_path_), plan, alpha_,
                 correction_ == "none" ? Correction::kNone
                                       : Correction::kBonferroni);
    Emit(out_, global_, report::TestReportText(g, r),
         report::TestReportJson(g, r));
    if (!r.Passed()) status_ = kExitFailure;
  });
}

int Runner::Run(std::vector<std::string> args) {
  CLI::App app("Local Markov properties of acyclic directed mixed graphs",
               "admg");
  app.require_subcommand(1);
  app.add_option("--format", global_.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", global_.seed, "Random seed");
  app.add_option("--cap", global_.cap,
                 "Size cap: closure universe for verify, graph size for "
                 "msep --brute-force");
  AddComponents(app);
  AddMsep(app);
  AddOrder(app);
  AddAnalyze(app);
  AddVerify(app);
  AddSemTests(app);
  AddSimulate(app);
  AddSemCheck(app);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out_, err_);
    return kExitInputError;
  } catch (const CapacityError& e) {
    err_ << "capacity error: " << e.what() << '\n';
    return kExitCapacityError;
  } catch (const InputError& e) {
    err_ << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return status_;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return Runner(out, err).Run(args);
}

}  // namespace admg::cli
