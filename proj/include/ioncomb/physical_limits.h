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

#ifndef IONCOMB_PHYSICAL_LIMITS_H
#define IONCOMB_PHYSICAL_LIMITS_H

#include <string>
#include <vector>

#include "ioncomb/params.h"

namespace ioncomb {

inline constexpr double kHbar = 1.054571817e-34;  // J s

/// Trap and cavity in SI units. Frequencies are angular (rad/s).
struct PhysicalParams {
    double mass = 0.0;      // kg
    double omega_a = 0.0;   // trap frequency
    double g0 = 0.0;        // atom-field coupling
    double lambda_c = 0.0;  // cavity wavelength, m

    double k_c() const;
    void validate() const;

    /// 40Ca+ in a 866 nm cavity, omega_a = 4e5 rad/s, g0 = 3.8e6 rad/s.
    static PhysicalParams calcium_example();
};

struct Coupling {
    double delta = 0.0;  // detuning, rad/s
    double g = 0.0;      // ponderomotive coupling, rad/s
    double k = 0.0;      // g / omega_a
};

struct LimitsReport {
    double xi = 0.0;
    double beta_max = 0.0;
    double alpha_max_LD = 0.0;
    double alpha_max_detuning = 0.0;
    double alpha_limit = 0.0;
    double delta = 0.0;
    double g = 0.0;
};

struct RegimeViolation {
    std::string quantity;  // "r", "alpha" or "beta"
    std::string bound;     // human-readable bound, e.g. "alpha <= 1.0045"
    double value = 0.0;
    double limit = 0.0;
    std::string reference;  // which constraint
};

/// k_c sqrt(hbar / (2 M omega_a)).
double lamb_dicke_xi(const PhysicalParams &phys);

/// Detuning chosen so that g / omega_a = 1/2, with g = (g0^2 / delta) xi.
Coupling coupling(const PhysicalParams &phys);

/// (sqrt(1 + 4 beta) - 1) / sqrt(2).
double alpha_max_of_beta(double beta);

LimitsReport limits(const PhysicalParams &phys);

/// Empty iff r >= 3/2, alpha <= alpha_limit and |beta - beta_max| <= beta_tolerance.
std::vector<RegimeViolation> validate_regime(const EncodingParams &params, const PhysicalParams &phys,
                                             double beta_tolerance = 0.05);

}  // namespace ioncomb

#endif
