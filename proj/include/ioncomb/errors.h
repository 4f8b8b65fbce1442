// Copyright 2026 The ioncomb Authors
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

#ifndef IONCOMB_ERRORS_H
#define IONCOMB_ERRORS_H

#include <stdexcept>
#include <string>

namespace ioncomb {

/// Arguments outside the mathematical domain of an operation (bad label,
/// singular prefactor, mismatched grids, parameters outside the comb regime).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A series could not be truncated below the requested tail tolerance.
class TruncationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature hit its depth limit. The best estimate reached so far
/// is attached.
class QuadratureError : public std::runtime_error {
   public:
    QuadratureError(const std::string &what, double estimate, double error_estimate)
        : std::runtime_error(what), estimate(estimate), error_estimate(error_estimate) {
    }

    double estimate;
    double error_estimate;
};

/// A closed-form estimate was requested outside the regime where it holds.
class ValidityError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A superposition whose norm vanishes.
class DegenerateStateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace ioncomb

#endif
