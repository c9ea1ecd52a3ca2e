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

#ifndef ADMG_GAUSSIAN_H_
#define ADMG_GAUSSIAN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "admg/admg.h"
#include "admg/ci_statement.h"
#include "admg/data_table.h"
#include "admg/local_markov.h"
#include "admg/ordering.h"

namespace admg {

// Parameters of the linear SEM v_j = sum_i c_ji v_i + e_j over an ADMG.
// coefficients()(j, i) holds c_ji for the edge i -> j; error_covariance() is
// Cov(e). Both are indexed by vertex id.
class SemParameters {
 public:
  SemParameters() = default;

  // Throws InputError unless the matrices are |V| x |V|, coefficients vanish
  // off the directed edges, the error covariance is symmetric, vanishes off
  // the diagonal and the bi-directed edges, and is positive definite.
  static SemParameters Create(const Admg& g, Eigen::MatrixXd coefficients,
                              Eigen::MatrixXd error_covariance);

  const Eigen::MatrixXd& coefficients() const { return coefficients_; }
  const Eigen::MatrixXd& error_covariance() const { return error_cov_; }
  double coefficient(VertexId tail, VertexId head) const {
    return coefficients_(static_cast<Eigen::Index>(head),
                         static_cast<Eigen::Index>(tail));
  }

 private:
  Eigen::MatrixXd coefficients_;
  Eigen::MatrixXd error_cov_;
};

// (I - C)^-1 Omega (I - C)^-T, solved along `ord`.
Eigen::MatrixXd ImpliedCovariance(const Admg& g, const SemParameters& p,
                                  const Ordering& ord);
Eigen::MatrixXd ImpliedCovariance(const Admg& g, const SemParameters& p);

// rho_{xy.Z} from the precision of sigma restricted to {x, y} u given.
// Throws InputError on bad arguments and NumericError if the restriction is
// not positive definite.
double PartialCorrelation(const Eigen::MatrixXd& sigma, VertexId x,
                          VertexId y, const VertexSet& given);

// Rejected when the error covariance or the implied covariance has a
// condition number above this.
inline constexpr double kMaxConditionNumber = 1e8;

// Deterministic in `seed`. Coefficient magnitudes lie in [0.3, 1] with a
// random sign; error correlations on bi-directed pairs are at least 0.05 in
// magnitude. Throws GenerationError if no acceptable draw is found.
SemParameters RandomParameters(const Admg& g, std::uint64_t seed);

// n i.i.d. rows from the model; columns named and ordered by vertex id.
DataTable Simulate(const Admg& g, const SemParameters& p, std::size_t n,
                   std::uint64_t seed);

struct PartialCorrTest {
  VertexId x;
  VertexId y;
  VertexSet given;
  // Index of the statement the test came from.
  std::size_t source_statement;
};

// One test per pair (x in X, y in Y) of each statement, with x < y and
// duplicates removed.
std::vector<PartialCorrTest> TestPlan(std::span<const CiStatement> statements);
std::vector<PartialCorrTest> TestPlan(const ReducedBasis& basis);

// "rho(a,e | d) = 0", or "rho(a,e) = 0" when nothing is given.
std::string FormatTest(const Admg& g, const PartialCorrTest& test);

enum class Correction { kNone, kBonferroni };
const char* CorrectionName(Correction c);

struct TestResult {
  PartialCorrTest test;
  // Set when the test could be run.
  std::optional<double> r;
  std::optional<double> z;
  std::optional<double> p_value;
  bool reject = false;
  // Non-empty when the test could not be run.
  std::string error;
};

struct TestReport {
  std::vector<TestResult> results;
  std::size_t sample_size = 0;
  double alpha = 0;
  Correction correction = Correction::kBonferroni;
  // p-values are compared against this.
  double threshold = 0;

  std::size_t Rejections() const;
  std::size_t Errors() const;
  // No rejection and no errored test.
  bool Passed() const { return Rejections() == 0 && Errors() == 0; }
};

// Fisher z tests of each vanishing partial correlation in `plan` against
// the sample covariance of `data`. Columns are matched to vertices by name;
// throws InputError if one is missing.
TestReport RunTests(const Admg& g, const DataTable& data,
                    std::span<const PartialCorrTest> plan, double alpha,
                    Correction correction = Correction::kBonferroni);

}  // namespace admg

#endif  // ADMG_GAUSSIAN_H_
