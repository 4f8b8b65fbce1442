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

#ifndef IONCOMB_COMB_STATE_H
#define IONCOMB_COMB_STATE_H

#include <vector>

#include "ioncomb/ideal_code.h"
#include "ioncomb/numerics.h"
#include "ioncomb/params.h"
#include "ioncomb/wavefunction.h"

namespace ioncomb {

enum class Sign { plus, minus };

const char *sign_symbol(Sign s);

/// Spike weights nu_m = e^{-alpha^2/2} alpha^{2m} / (2m)!!, m = 0 .. m_max.
///
/// These are Poisson probabilities with mean alpha^2/2, so they sum to one;
/// `tail_bound` is the mass beyond m_max.
struct NuWeights {
    double alpha = 0.0;
    int m_min = 0;
    int m_max = 0;
    std::vector<double> values;
    double tail_bound = 0.0;

    double operator[](int m) const {
        return (m < 0 || m > m_max) ? 0.0 : values[static_cast<std::size_t>(m)];
    }
};

NuWeights nu_weights(double alpha, double tolerance = kDefaultTolerance);

/// Same, but never truncating below `trunc.m_max`.
NuWeights nu_weights(double alpha, const TruncationPolicy &trunc);

/// Amplitudes (a, b) of a|0~> + b|1~>. |a|^2 + |b|^2 must be 1.
struct CodewordLabel {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    static CodewordLabel of(Codeword c);
};

/// Density of the homodyne outcome X = 0 in the comb regime:
/// pi^{-1/2} sum_{m,m'} nu_m nu_m' exp(-2 e^{2r} (m - m')^2).
double zero_outcome_density(double alpha, double r, double tolerance = kDefaultTolerance);

/// Closed-form comb codeword |0~> for one comb-regime parameter set.
///
/// phi(x) = N sum_m nu_m Omega_m(x), with Omega_m a squeezed Gaussian of
/// width e^{-r}/sqrt(2) centred at sqrt(2)(2m - beta), and N the inverse
/// square root of zero_outcome_density. Evaluates pointwise; the grid
/// functions below sample it.
class CombState {
   public:
    CombState(const EncodingParams &params, const TruncationPolicy &trunc);

    const EncodingParams &params() const {
        return params_;
    }
    const TruncationPolicy &truncation() const {
        return trunc_;
    }
    const NuWeights &nu() const {
        return nu_;
    }
    double zero_outcome_density() const {
        return density_;
    }
    /// N = P(X=0)^{-1/2}.
    double normalization() const {
        return norm_;
    }

    /// Normalized phi(x) of |0~> (real).
    double phi(double x) const;

    /// Normalized psi(p) of |0~>.
    Complex psi(double p) const;

    /// sum_m nu_m e^{-i 2 sqrt(2) m p}.
    Complex comb_sum(double p) const;

    /// <0~|1~>, computed by quadrature on the position grid. Real in the
    /// comb regime; construction fails if its imaginary part exceeds 1e-10.
    Complex codeword_overlap() const {
        return overlap_;
    }

    /// N_(+/-)^2 = 2 (1 +/- Re<0~|1~>).
    double pm_norm_squared(Sign s) const;

    /// psi_(+/-)(p) of (|0~> +/- |1~>) / N_(+/-), evaluated analytically.
    Complex psi_pm(Sign s, double p) const;

   private:
    EncodingParams params_;
    TruncationPolicy trunc_;
    NuWeights nu_;
    double density_ = 0.0;
    double norm_ = 0.0;
    Complex overlap_;
};

/// |0~> on the position grid of `trunc`.
Wavefunction phi0(const EncodingParams &params, const TruncationPolicy &trunc);

/// |0~> on the momentum grid of `trunc`, from the analytic Fourier transform.
Wavefunction psi0(const EncodingParams &params, const TruncationPolicy &trunc);

/// a|0~> + b|1~> with |1~> the beta -> beta + 1 comb, normalized with the
/// overlap-corrected norm, sampled on either grid of `trunc`.
Wavefunction codeword(const CodewordLabel &label, const EncodingParams &params, const TruncationPolicy &trunc,
                      Axis axis = Axis::position);

inline Wavefunction codeword(Codeword c, const EncodingParams &params, const TruncationPolicy &trunc,
                             Axis axis = Axis::position) {
    return codeword(CodewordLabel::of(c), params, trunc, axis);
}

/// psi_(+/-) on the momentum grid of `trunc`, from the analytic expression.
Wavefunction psi_pm(Sign s, const EncodingParams &params, const TruncationPolicy &trunc);

/// <0~|1~> by position-grid quadrature.
Complex codeword_overlap(const EncodingParams &params, const TruncationPolicy &trunc);

struct SpikeStatistics {
    double m_bar = 0.0;
    double delta_m = 0.0;
    double m_bar_approx = 0.0;
    double delta_m_approx = 0.0;
};

/// Mean and spread of P(m) = nu_m / sum nu, next to alpha^2/2 and alpha/sqrt(2).
SpikeStatistics spike_statistics(double alpha, double tolerance = kDefaultTolerance);

}  // namespace ioncomb

#endif
