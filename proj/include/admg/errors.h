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

#ifndef ADMG_ERRORS_H_
#define ADMG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace admg {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input: unknown vertices, overlapping sets,
// inconsistent orderings, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for the given graph
// (for example, the reduced property requested on a graph with a mixed
// directed cycle).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Input exceeds a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: a covariance restriction is not positive definite, etc.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Random parameter generation gave up after its bounded retries.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// An invariant the algorithms guarantee was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace admg

#endif  // ADMG_ERRORS_H_
