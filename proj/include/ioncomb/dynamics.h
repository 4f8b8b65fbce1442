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

#ifndef IONCOMB_DYNAMICS_H
#define IONCOMB_DYNAMICS_H

#include <vector>

#include "ioncomb/numerics.h"
#include "ioncomb/params.h"
#include "ioncomb/wavefunction.h"

namespace ioncomb {

/// zeta_n = n k (e^{i tau} - 1).
Complex zeta_n(int n, double k, double tau);

/// Expansion coefficients of the joint ion-cavity state after the
/// ponderomotive evolution, one term per cavity photon number n.
///
/// Magnitudes are kept as logarithms: log_b[n] = log(B_n) with the principal
/// imaginary part left unreduced. A vanishing B_n (alpha = 0, n > 0) is
/// stored with real part -inf.
struct ConditionalCoefficients {
    Complex log_a;
    std::vector<Complex> log_b;
    std::vector<Complex> zeta;
    int n_max = 0;

    Complex a() const {
        return std::exp(log_a);
    }
    Complex b(int n) const;
};

ConditionalCoefficients conditional_coefficients(const EncodingParams &params, const TruncationPolicy &trunc);

/// The ion wavefunction left behind when the cavity quadrature is measured
/// with outcome X:
///
///   Phi(x) = N_X / (pi^{1/4} sqrt(1 - Gamma e^{-2i tau})) A
///            sum_n <X|n> B_n exp(D_n(x)),
///
/// with D_n quadratic in x. Built once per parameter set; evaluation for a
/// given X is const and may run concurrently.
class ConditionalState {
   public:
    ConditionalState(const EncodingParams &params, const TruncationPolicy &trunc);

    const EncodingParams &params() const {
        return params_;
    }
    const TruncationPolicy &truncation() const {
        return trunc_;
    }
    const ConditionalCoefficients &coefficients() const {
        return coeffs_;
    }

    /// Phi on the position grid of the truncation policy. With
    /// `normalize == false` the amplitude is the projection <X|Psi> itself,
    /// whose squared norm is the outcome density.
    Wavefunction wavefunction(double X, bool normalize = true) const;

    /// Unnormalized Phi at a single point.
    Complex amplitude(double X, double x) const;

    /// P(X) = int |Phi_unnormalized(x)|^2 dx.
    double density(double X) const;

   private:
    friend class HomodyneDistribution;

    struct Term {
        int n;
        Complex c0;  // log A + log B_n + constant part of D_n
        Complex c1;  // linear coefficient of D_n
    };

    EncodingParams params_;
    TruncationPolicy trunc_;
    ConditionalCoefficients coeffs_;
    Complex prefactor_;
    Complex quadratic_;  // x^2 coefficient of D_n (n independent)
    std::vector<Term> terms_;
};

/// Precomputed Gram matrix G_nn' = <phi_n'|phi_n> of the photon-number
/// components, so that P(X) = sum h_n(X) h_n'(X) G_nn' costs O(n^2) per X.
class HomodyneDistribution {
   public:
    explicit HomodyneDistribution(const ConditionalState &state);

    double density(double X) const;

   private:
    std::vector<int> ns_;
    std::vector<double> gram_re_;  // row-major, size ns_.size()^2; the imaginary part cancels
    int n_max_ = 0;
};

Wavefunction conditional_wavefunction(const EncodingParams &params, double X, const TruncationPolicy &trunc,
                                      bool normalize = true);

double homodyne_density(const EncodingParams &params, double X, const TruncationPolicy &trunc);

struct WindowAcceptance {
    /// Probability that the homodyne outcome lands in [X_lo, X_hi].
    double probability = 0.0;
    /// Density-weighted mean of the maximum intrinsic error probability of
    /// the conditional codewords over the window.
    double mean_error_bound = 0.0;
};

/// Accepting every outcome in [X_lo, X_hi] instead of X = 0 only.
/// `error_samples` (odd, >= 3) Simpson nodes carry the error average.
WindowAcceptance window_acceptance(const EncodingParams &params, double X_lo, double X_hi,
                                   const TruncationPolicy &trunc, int error_samples = 9);

/// Only the probability part of window_acceptance.
double window_probability(const EncodingParams &params, double X_lo, double X_hi, const TruncationPolicy &trunc);

}  // namespace ioncomb

#endif
