// Copyright 2026 The gaussep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSSEP_ERRORS_HPP_
#define GAUSSEP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gaussep {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: non-finite entries, negative tolerance, out-of-range parameter.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Bisection called on an interval without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// A or B block is not positive definite; the matrix cannot be a covariance matrix.
class NotAState : public Error {
 public:
  using Error::Error;
};

/// The covariance matrix violates the uncertainty principle.
class NotPhysical : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class BranchError : public Error {
 public:
  using Error::Error;
};

/// Square-root argument or denominator outside the domain of a closed form.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The DGCZ root search has no sign change on [1, n] for this state.
class NoBracket : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussep

#endif  // GAUSSEP_ERRORS_HPP_
