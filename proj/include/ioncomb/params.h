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

#ifndef IONCOMB_PARAMS_H
#define IONCOMB_PARAMS_H

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace ioncomb {

/// Dimensionless knobs of the encoding scheme.
///
/// `alpha` is the cavity coherent amplitude, `beta` the initial ion
/// displacement, `r` and `phi` the magnitude and phase of the motional
/// squeezing, `k` the coupling in units of the trap frequency and `tau` the
/// interaction time in units of the inverse trap frequency.
///
/// The defaults are the comb regime: the measurement time and coupling at
/// which the conditional state becomes a comb of position-squeezed spikes.
struct EncodingParams {
    double alpha = 0.0;
    double beta = 0.0;
    double r = 0.0;
    double phi = 0.0;
    double k = 0.5;
    double tau = std::numbers::pi;

    /// e^{2i phi} tanh r.
    std::complex<double> gamma() const {
        return std::polar(std::tanh(r), 2.0 * phi);
    }

    /// k = 1/2, tau = pi, phi = 0 and non-negative alpha, beta.
    bool is_comb_regime() const;

    /// Copy of these parameters with a different beta.
    EncodingParams with_beta(double new_beta) const {
        EncodingParams out = *this;
        out.beta = new_beta;
        return out;
    }

    std::string str() const;
};

/// Throws DomainError naming the offending field unless `p` is in the comb regime.
void require_comb_regime(const EncodingParams &p, const char *operation);

/// Throws DomainError if any field is non-finite or alpha/r/k are out of range.
void require_valid(const EncodingParams &p);

}  // namespace ioncomb

#endif
