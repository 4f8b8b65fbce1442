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

#include "ioncomb/params.h"

#include <cstdio>

#include "ioncomb/errors.h"

namespace ioncomb {

namespace {
constexpr double kRegimeSlack = 1e-12;
}

bool EncodingParams::is_comb_regime() const {
    return std::abs(k - 0.5) <= kRegimeSlack && std::abs(tau - std::numbers::pi) <= kRegimeSlack &&
           std::abs(phi) <= kRegimeSlack && alpha >= 0.0 && beta >= 0.0;
}

std::string EncodingParams::str() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "alpha=%.17g beta=%.17g r=%.17g phi=%.17g k=%.17g tau=%.17g", alpha, beta, r, phi,
                  k, tau);
    return buf;
}

void require_valid(const EncodingParams &p) {
    auto check = [](bool ok, const char *msg) {
        if (!ok) {
            throw DomainError(msg);
        }
    };
    check(std::isfinite(p.alpha) && p.alpha >= 0.0, "encoding.alpha must be finite and >= 0");
    check(std::isfinite(p.beta), "encoding.beta must be finite");
    check(std::isfinite(p.r) && p.r >= 0.0, "encoding.r must be finite and >= 0");
    check(std::isfinite(p.phi), "encoding.phi must be finite");
    check(std::isfinite(p.k) && p.k > 0.0, "encoding.k must be finite and > 0");
    check(std::isfinite(p.tau) && p.tau >= 0.0, "encoding.tau must be finite and >= 0");
}

void require_comb_regime(const EncodingParams &p, const char *operation) {
    require_valid(p);
    if (p.is_comb_regime()) {
        return;
    }
    std::string why;
    if (std::abs(p.k - 0.5) > kRegimeSlack) {
        why = "k != 1/2";
    } else if (std::abs(p.tau - std::numbers::pi) > kRegimeSlack) {
        why = "tau != pi";
    } else if (std::abs(p.phi) > kRegimeSlack) {
        why = "phi != 0";
    } else {
        why = "beta < 0";
    }
    throw DomainError(std::string(operation) + " requires the comb regime (" + why + ")");
}

}  // namespace ioncomb
