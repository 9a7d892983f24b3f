// Copyright 2026 The Cost Prophet Authors.
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

#ifndef COSTPROPHET_ERRORS_HPP
#define COSTPROPHET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace costprophet {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure (series, quadrature, fit) failed to reach its
/// tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An integral over a semi-infinite range does not settle.
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The distribution is outside what an operation supports: infinite mean
/// where a finite policy cost is needed, a missing Puiseux head, or a
/// non-regular virtual cost.
class UnsupportedDistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteMeanError : public UnsupportedDistributionError {
 public:
  explicit InfiniteMeanError(const std::string& name)
      : UnsupportedDistributionError("distribution '" + name +
                                     "' has infinite mean") {}
};

}  // namespace costprophet

#endif  // COSTPROPHET_ERRORS_HPP
