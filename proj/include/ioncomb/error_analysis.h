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

#ifndef IONCOMB_ERROR_ANALYSIS_H
#define IONCOMB_ERROR_ANALYSIS_H

#include <string>
#include <vector>

#include "ioncomb/comb_state.h"
#include "ioncomb/numerics.h"
#include "ioncomb/params.h"
#include "ioncomb/wavefunction.h"

namespace ioncomb {

/// Absolute tolerance of each error-region integral.
inline constexpr double kRegionTolerance = 1e-10;

struct ErrorReport {
    double p_x_exact = 0.0;
    /// NaN when the bound was not requested or not applicable.
    double p_x_bound = 0.0;
    double p_p_plus = 0.0;
    double p_p_minus = 0.0;
    double p_max = 0.0;
    /// The X = 0 outcome density (a density, not a probability mass).
    double success_probability = 0.0;
};

/// Probability that x-recovery on |0~> lands in an error region
/// sqrt(2)[2n - 3/2 - beta, 2n - 1/2 - beta].
double px_exact(const EncodingParams &params, const TruncationPolicy &trunc);

/// Closed-form upper bound on px_exact from the asymptotic erfc tail,
/// N^2/(pi sqrt 2) e^{-(r + e^{2r}/2)} [e^{-alpha^2} + sum_{m>=1} (nu_{m-1} + nu_m)^2].
/// Valid for r >= 3/2; throws ValidityError below that unless
/// `allow_outside_validity` is set.
double px_bound(const EncodingParams &params, bool allow_outside_validity = false,
                double tolerance = kDefaultTolerance);

/// K^(+/-)_{m,m'} = sum_n int_{R_n^(+/-)} e^{-e^{-2r} p^2} (1 +/- cos sqrt(2) p) cos(2 sqrt(2) p (m - m')) dp
/// with R_n^+ = (pi/sqrt 2)[2n + 1/2, 2n + 3/2], R_n^- = (pi/sqrt 2)[2n - 1/2, 2n + 1/2],
/// summed over regions inside |p| <= trunc.p_cut.
double k_integral(int m, int m_prime, Sign s, double r, const TruncationPolicy &trunc);

/// P_(p,+/-) from the K-integral series (the primary form).
double pp(Sign s, const EncodingParams &params, const TruncationPolicy &trunc);

/// P_(p,+/-) by direct quadrature of |psi_(+/-)|^2 over the error regions.
double pp_direct(Sign s, const EncodingParams &params, const TruncationPolicy &trunc);

/// px_exact, px_bound (NaN if r < 3/2), pp(+), pp(-), their maximum and the
/// X = 0 outcome density.
ErrorReport p_max(const EncodingParams &params, const TruncationPolicy &trunc);

/// Error probabilities of arbitrary grid codewords. `zero` and `one` are the
/// position-space |0~> and |1~> of one encoding (sharing a grid); x errors
/// are measured against the sqrt(2)(2n - beta) lattice, p errors on the
/// Fourier transform of (|0~> +/- |1~>) sampled on the momentum grid of
/// `trunc`. success_probability is left at 0.
ErrorReport grid_error_report(const Wavefunction &zero, const Wavefunction &one, double beta,
                              const TruncationPolicy &trunc);

struct SweepRow {
    double alpha = 0.0;
    double r = 0.0;
    double p_p = 0.0;
    /// log(p_p) minus the fitted line; NaN outside the fitted range.
    double fit_residual = 0.0;
    /// Empty on success.
    std::string error;
};

/// p = amplitude * exp(-decay_rate * alpha).
struct ExponentialFit {
    double r = 0.0;
    double amplitude = 0.0;
    double decay_rate = 0.0;
    /// R^2 of the least-squares line through (alpha, log p).
    double r_squared = 0.0;
    /// Nonlinear least squares of p itself against the same model, and the
    /// R^2 of that fit in linear space.
    double direct_amplitude = 0.0;
    double direct_decay_rate = 0.0;
    double direct_r_squared = 0.0;
    int points = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<ExponentialFit> fits;  // one per r, same order as r_list
};

/// Lower end of the alpha range entering the exponential fit.
inline constexpr double kFitAlphaMin = 0.5;

/// Fits log p = log A - lambda alpha over the points with alpha >= kFitAlphaMin.
ExponentialFit fit_exponential(const std::vector<double> &alpha, const std::vector<double> &p);

/// P_(p,+) on an alpha grid for every r in r_list. n_points == 1 evaluates
/// alpha_lo alone. Rows are ordered by
/// (r index, alpha) regardless of `threads`; a failed point keeps its row
/// with p_p = NaN and the message in `error`.
SweepResult sweep(double alpha_lo, double alpha_hi, int n_points, const std::vector<double> &r_list,
                  double tolerance = kDefaultTolerance, int threads = 1);

}  // namespace ioncomb

#endif
