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

#include "admg/gaussian.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "admg/errors.h"

namespace admg {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;

constexpr double kRidge = 0.1;
constexpr int kMaxHalvings = 10;
constexpr int kMaxDraws = 100;
constexpr double kMinErrorCorrelation = 0.05;
constexpr double kCoefficientLow = 0.3;
constexpr double kCoefficientHigh = 1.0;

Index Ix(std::size_t v) { return static_cast<Index>(v); }

bool IsPositiveDefinite(const MatrixXd& m) {
  Eigen::LLT<MatrixXd> llt(m);
  return llt.info() == Eigen::Success;
}

double ConditionNumber(const MatrixXd& m) {
  if (m.rows() == 0) return 1;
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  if (ev.minCoeff() <= 0) return std::numeric_limits<double>::infinity();
  return ev.maxCoeff() / ev.minCoeff();
}

// (I - C) with rows and columns permuted into `ord`; unit lower triangular.
MatrixXd OrderedSystem(const MatrixXd& c, const Ordering& ord) {
  const Index n = c.rows();
  MatrixXd a = MatrixXd::Identity(n, n);
  const auto& seq = ord.sequence();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      a(i, j) = -c(Ix(seq[i]), Ix(seq[j]));
    }
  }
  return a;
}

MatrixXd Permuted(const MatrixXd& m, const Ordering& ord) {
  const Index n = m.rows();
  const auto& seq = ord.sequence();
  MatrixXd out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out(i, j) = m(Ix(seq[i]), Ix(seq[j]));
  }
  return out;
}

MatrixXd Unpermuted(const MatrixXd& m, const Ordering& ord) {
  const Index n = m.rows();
  const auto& seq = ord.sequence();
  MatrixXd out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out(Ix(seq[i]), Ix(seq[j])) = m(i, j);
  }
  return out;
}

// (I - C)^-1 in vertex-id indexing.
MatrixXd TotalEffects(const Admg& g, const MatrixXd& c) {
  const Ordering ord = Ordering::FromIds(g, g.topological_order());
  const MatrixXd a = OrderedSystem(c, ord);
  const MatrixXd inv = a.triangularView<Eigen::UnitLower>().solve(
      MatrixXd::Identity(a.rows(), a.cols()));
  return Unpermuted(inv, ord);
}

// Per c-component factor M M^T + ridge, restricted to the bi-directed
// support, with off-diagonals halved until positive definite.
std::optional<MatrixXd> DrawErrorCovariance(const Admg& g,
                                            std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const Index n = Ix(g.size());
  MatrixXd omega = MatrixXd::Zero(n, n);
  for (const VertexSet& component : CComponents(g)) {
    const std::vector<VertexId> members = component.members();
    const Index k = Ix(members.size());
    MatrixXd factor(k, k);
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) factor(i, j) = normal(rng);
    }
    MatrixXd block = factor * factor.transpose();
    block.diagonal().array() += kRidge;
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) {
        if (i != j && !g.HasBidirectedEdge(members[i], members[j])) {
          block(i, j) = 0;
        }
      }
    }
    int halvings = 0;
    while (!IsPositiveDefinite(block)) {
      if (halvings++ == kMaxHalvings) return std::nullopt;
      const Eigen::VectorXd diagonal = block.diagonal();
      block *= 0.5;
      block.diagonal() = diagonal;
    }
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) {
        if (i != j && block(i, j) != 0 &&
            std::abs(block(i, j)) / std::sqrt(block(i, i) * block(j, j)) <
                kMinErrorCorrelation) {
          return std::nullopt;
        }
        omega(Ix(members[i]), Ix(members[j])) = block(i, j);
      }
    }
  }
  return omega;
}

}  // namespace

SemParameters SemParameters::Create(const Admg& g, MatrixXd coefficients,
                                    MatrixXd error_covariance) {
  const Index n = Ix(g.size());
  if (coefficients.rows() != n || coefficients.cols() != n ||
      error_covariance.rows() != n || error_covariance.cols() != n) {
    throw InputError("SEM parameter matrices must be " + std::to_string(n) +
                     " x " + std::to_string(n));
  }
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const VertexId head = static_cast<VertexId>(j);
      const VertexId tail = static_cast<VertexId>(i);
      if (coefficients(j, i) != 0 && !g.HasDirectedEdge(tail, head)) {
        throw InputError("coefficient on non-edge " + g.name(tail) + " -> " +
                         g.name(head));
      }
      if (!std::isfinite(coefficients(j, i))) {
        throw InputError("coefficient is not finite");
      }
      if (error_covariance(i, j) != error_covariance(j, i)) {
        throw InputError("error covariance is not symmetric");
      }
      if (i != j && error_covariance(i, j) != 0 &&
          !g.HasBidirectedEdge(tail, head)) {
        throw InputError("error covariance between " + g.name(tail) + " and " +
                         g.name(head) + " without a bi-directed edge");
      }
    }
  }
  if (!IsPositiveDefinite(error_covariance)) {
    throw InputError("error covariance is not positive definite");
  }
  SemParameters p;
  p.coefficients_ = std::move(coefficients);
  p.error_cov_ = std::move(error_covariance);
  return p;
}

MatrixXd ImpliedCovariance(const Admg& g, const SemParameters& p,
                           const Ordering& ord) {
  const Index n = Ix(g.size());
  if (p.coefficients().rows() != n || ord.size() != g.size()) {
    throw InputError("parameters or ordering do not match the graph");
  }
  const MatrixXd a = OrderedSystem(p.coefficients(), ord);
  const auto lower = a.triangularView<Eigen::UnitLower>();
  const MatrixXd half = lower.solve(Permuted(p.error_covariance(), ord));
  MatrixXd sigma = lower.solve(half.transpose()).transpose();
  sigma = 0.5 * (sigma + sigma.transpose()).eval();
  return Unpermuted(sigma, ord);
}

MatrixXd ImpliedCovariance(const Admg& g, const SemParameters& p) {
  return ImpliedCovariance(g, p, Ordering::FromIds(g, g.topological_order()));
}

double PartialCorrelation(const MatrixXd& sigma, VertexId x, VertexId y,
                          const VertexSet& given) {
  const std::size_t n = static_cast<std::size_t>(sigma.rows());
  if (sigma.cols() != sigma.rows()) {
    throw InputError("covariance matrix is not square");
  }
  if (x >= n || y >= n || given.universe_size() != n) {
    throw InputError("partial correlation indices do not match the matrix");
  }
  if (x == y || given.contains(x) || given.contains(y)) {
    throw InputError("partial correlation needs distinct x, y outside given");
  }
  std::vector<VertexId> index = {x, y};
  for (VertexId v : given) index.push_back(v);
  const Index k = Ix(index.size());
  MatrixXd restricted(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      restricted(i, j) = sigma(Ix(index[i]), Ix(index[j]));
    }
  }
  Eigen::LLT<MatrixXd> llt(restricted);
  if (llt.info() != Eigen::Success) {
    throw NumericError("covariance restricted to the test variables is not "
                       "positive definite");
  }
  const MatrixXd precision = llt.solve(MatrixXd::Identity(k, k));
  const double rho =
      -precision(0, 1) / std::sqrt(precision(0, 0) * precision(1, 1));
  return std::clamp(rho, -1.0, 1.0);
}

SemParameters RandomParameters(const Admg& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> magnitude(kCoefficientLow,
                                                   kCoefficientHigh);
  std::bernoulli_distribution negative(0.5);
  const Index n = Ix(g.size());
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    MatrixXd c = MatrixXd::Zero(n, n);
    for (const auto& [tail, head] : g.directed_edges()) {
      const double m = magnitude(rng);
      c(Ix(head), Ix(tail)) = negative(rng) ? -m : m;
    }
    std::optional<MatrixXd> omega = DrawErrorCovariance(g, rng);
    if (!omega || ConditionNumber(*omega) > kMaxConditionNumber) continue;
    SemParameters p = SemParameters::Create(g, std::move(c), *std::move(omega));
    if (ConditionNumber(ImpliedCovariance(g, p)) > kMaxConditionNumber) {
      continue;
    }
    return p;
  }
  throw GenerationError("no acceptable SEM parameters after " +
                        std::to_string(kMaxDraws) + " draws");
}

DataTable Simulate(const Admg& g, const SemParameters& p, std::size_t n,
                   std::uint64_t seed) {
  if (n == 0) throw InputError("sample count must be at least 1");
  const Index k = Ix(g.size());
  if (p.coefficients().rows() != k) {
    throw InputError("parameters do not match the graph");
  }
  Eigen::LLT<MatrixXd> llt(p.error_covariance());
  if (llt.info() != Eigen::Success) {
    throw InputError("error covariance is not positive definite");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXd noise(Ix(n), k);
  for (Index r = 0; r < Ix(n); ++r) {
    for (Index c = 0; c < k; ++c) noise(r, c) = normal(rng);
  }
  const MatrixXd errors = noise * MatrixXd(llt.matrixL()).transpose();
  DataTable table;
  table.columns = g.names();
  table.values = errors * TotalEffects(g, p.coefficients()).transpose();
  return table;
}

std::vector<PartialCorrTest> TestPlan(std::span<const CiStatement> statements) {
  std::vector<PartialCorrTest> plan;
  std::set<std::tuple<VertexId, VertexId, std::vector<VertexId>>> seen;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const CiStatement& s = statements[i];
    for (VertexId a : s.x()) {
      for (VertexId b : s.y()) {
        const VertexId x = std::min(a, b);
        const VertexId y = std::max(a, b);
        if (seen.emplace(x, y, s.z().members()).second) {
          plan.push_back({x, y, s.z(), i});
        }
      }
    }
  }
  return plan;
}

std::vector<PartialCorrTest> TestPlan(const ReducedBasis& basis) {
  const std::vector<CiStatement> statements = basis.Statements();
  return TestPlan(statements);
}

std::string FormatTest(const Admg& g, const PartialCorrTest& test) {
  std::string out = "rho(" + g.name(test.x) + "," + g.name(test.y);
  if (!test.given.empty()) {
    out += " |";
    const char* sep = " ";
    for (VertexId v : test.given) {
      out += sep + g.name(v);
      sep = ",";
    }
  }
  return out + ") = 0";
}

const char* CorrectionName(Correction c) {
  return c == Correction::kBonferroni ? "bonferroni" : "none";
}

std::size_t TestReport::Rejections() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(),
                    [](const TestResult& r) { return r.reject; }));
}

std::size_t TestReport::Errors() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(),
                    [](const TestResult& r) { return !r.error.empty(); }));
}

TestReport RunTests(const Admg& g, const DataTable& data,
                    std::span<const PartialCorrTest> plan, double alpha,
                    Correction correction) {
  if (!(alpha > 0 && alpha < 1)) {
    throw InputError("alpha must lie strictly between 0 and 1");
  }
  // Columns for every vertex the plan mentions.
  std::map<VertexId, Index> local;
  for (const PartialCorrTest& t : plan) {
    g.CheckVertex(t.x);
    g.CheckVertex(t.y);
    g.CheckSet(t.given);
    local.emplace(t.x, 0);
    local.emplace(t.y, 0);
    for (VertexId v : t.given) local.emplace(v, 0);
  }
  const Index n = data.values.rows();
  MatrixXd selected(n, Ix(local.size()));
  Index next = 0;
  for (auto& [v, column] : local) {
    const std::optional<std::size_t> source = data.ColumnIndex(g.name(v));
    if (!source) {
      throw InputError("data has no column for vertex '" + g.name(v) + "'");
    }
    column = next++;
    selected.col(column) = data.values.col(Ix(*source));
  }
  MatrixXd cov = MatrixXd::Zero(selected.cols(), selected.cols());
  if (n >= 2) {
    const MatrixXd centered =
        selected.rowwise() - selected.colwise().mean();
    cov = centered.transpose() * centered / static_cast<double>(n - 1);
  }

  TestReport report;
  report.sample_size = static_cast<std::size_t>(n);
  report.alpha = alpha;
  report.correction = correction;
  report.threshold = correction == Correction::kBonferroni && !plan.empty()
                         ? alpha / static_cast<double>(plan.size())
                         : alpha;
  for (const PartialCorrTest& t : plan) {
    TestResult result{t, std::nullopt, std::nullopt, std::nullopt, false, {}};
    const Index given = Ix(t.given.size());
    if (n <= given + 3) {
      result.error = "insufficient sample size: n = " + std::to_string(n) +
                     " must exceed " + std::to_string(given + 3);
      report.results.push_back(std::move(result));
      continue;
    }
    VertexSet z(local.size());
    for (VertexId v : t.given) z.insert(static_cast<VertexId>(local.at(v)));
    try {
      const double r =
          PartialCorrelation(cov, static_cast<VertexId>(local.at(t.x)),
                             static_cast<VertexId>(local.at(t.y)), z);
      const double scale = std::sqrt(static_cast<double>(n - given - 3));
      const double stat = std::abs(r) >= 1
                              ? std::copysign(
                                    std::numeric_limits<double>::infinity(), r)
                              : scale * std::atanh(r);
      const double p =
          std::clamp(std::erfc(std::abs(stat) / std::sqrt(2.0)), 0.0, 1.0);
      result.r = r;
      result.z = stat;
      result.p_value = p;
      result.reject = p < report.threshold;
    } catch (const NumericError& e) {
      result.error = e.what();
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace admg
