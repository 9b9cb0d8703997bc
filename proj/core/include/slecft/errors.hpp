// Copyright 2026 The slecft Authors
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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace slecft {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A contour passes too close to a singular point, or a stencil leaves the domain.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Generic numerical breakdown (series divergence, step-size collapse, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Requested accuracy not reached; carries the best available estimate.
class AccuracyError : public NumericError {
 public:
  AccuracyError(const std::string& what, std::complex<double> best, double err)
      : NumericError(what), best_estimate(best), error_estimate(err) {}
  std::complex<double> best_estimate;
  double error_estimate;
};

}  // namespace slecft
