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

#include "ioncomb/physical_limits.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "ioncomb/errors.h"

namespace ioncomb {

namespace {

std::string format_bound(const char *lhs, const char *op, double value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %s %.6g", lhs, op, value);
    return buf;
}

}  // namespace

double PhysicalParams::k_c() const {
    return 2.0 * std::numbers::pi / lambda_c;
}

void PhysicalParams::validate() const {
    auto positive = [](double v, const char *name) {
        if (!std::isfinite(v) || !(v > 0.0)) {
            throw DomainError(std::string("physical.") + name + " must be finite and > 0");
        }
    };
    positive(mass, "mass");
    positive(omega_a, "omega_a");
    positive(g0, "g0");
    positive(lambda_c, "lambda_c");
}

PhysicalParams PhysicalParams::calcium_example() {
    return {6.64e-26, 4e5, 3.8e6, 866e-9};
}

double lamb_dicke_xi(const PhysicalParams &phys) {
    phys.validate();
    return phys.k_c() * std::sqrt(kHbar / (2.0 * phys.mass * phys.omega_a));
}

Coupling coupling(const PhysicalParams &phys) {
    const double xi = lamb_dicke_xi(phys);
    Coupling c;
    c.delta = 2.0 * xi * phys.g0 * phys.g0 / phys.omega_a;
    c.g = phys.g0 * phys.g0 / c.delta * xi;
    c.k = 0.5;
    return c;
}

double alpha_max_of_beta(double beta) {
    if (!std::isfinite(beta) || beta < -0.25) {
        throw DomainError("alpha_max_of_beta: need beta >= -1/4");
    }
    return (std::sqrt(1.0 + 4.0 * beta) - 1.0) / std::numbers::sqrt2;
}

LimitsReport limits(const PhysicalParams &phys) {
    LimitsReport rep;
    rep.xi = lamb_dicke_xi(phys);
    rep.beta_max = std::numbers::pi / (8.0 * rep.xi);
    rep.alpha_max_LD = (std::sqrt(1.0 + std::numbers::pi / (2.0 * rep.xi)) - 1.0) / std::numbers::sqrt2;
    rep.alpha_max_detuning =
        std::sqrt(kHbar / (20.0 * phys.mass * phys.omega_a * phys.omega_a * phys.omega_a)) * phys.g0 * phys.k_c();
    rep.alpha_limit = std::min(rep.alpha_max_LD, rep.alpha_max_detuning);
    const Coupling c = coupling(phys);
    rep.delta = c.delta;
    rep.g = c.g;
    return rep;
}

std::vector<RegimeViolation> validate_regime(const EncodingParams &params, const PhysicalParams &phys,
                                             double beta_tolerance) {
    const LimitsReport rep = limits(phys);
    std::vector<RegimeViolation> out;
    if (!(params.r >= 1.5)) {
        out.push_back({"r", "r >= 1.5", params.r, 1.5, "squeezing needed for the error-function asymptotics"});
    }
    if (!(params.alpha <= rep.alpha_limit)) {
        const char *which = rep.alpha_max_LD <= rep.alpha_max_detuning ? "Lamb-Dicke expansion of the optical potential"
                                                                         : "large-detuning condition";
        out.push_back({"alpha", format_bound("alpha", "<=", rep.alpha_limit), params.alpha, rep.alpha_limit, which});
    }
    if (!(std::abs(params.beta - rep.beta_max) <= beta_tolerance)) {
        char bound[96];
        std::snprintf(bound, sizeof(bound), "|beta - %.6g| <= %.6g", rep.beta_max, beta_tolerance);
        out.push_back({"beta", bound, params.beta, rep.beta_max, "initial displacement at the Lamb-Dicke limit"});
    }
    return out;
}

}  // namespace ioncomb
