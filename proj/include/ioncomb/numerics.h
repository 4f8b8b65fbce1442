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

#ifndef IONCOMB_NUMERICS_H
#define IONCOMB_NUMERICS_H

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ioncomb/errors.h"

namespace ioncomb {

struct EncodingParams;

/// Default tail tolerance used by the CLI and the acceptance suite.
inline constexpr double kDefaultTolerance = 1e-14;

/// Hard ceiling on the photon-number cutoff.
inline constexpr int kMaxPhotonNumber = 4096;

/// Where every infinite series and infinite integral in the library is cut.
///
/// `n_max` bounds the photon-number sum of the conditional wavefunction,
/// `[n_lo, n_hi]` is the photon-number range whose Poisson weight exceeds
/// `tolerance`, `[m_min, m_max]` the same for the spike weights. The position
/// grid is `x_lo + i * grid_step` up to `x_hi`; the momentum grid is symmetric
/// around p = 0 with spacing `p_step` and half-width at least `p_cut`.
struct TruncationPolicy {
    double tolerance = kDefaultTolerance;
    int n_max = 20;
    int n_lo = 0;
    int n_hi = 0;
    int m_min = 0;
    int m_max = 0;
    double p_cut = 0.0;
    double x_lo = 0.0;
    double x_hi = 0.0;
    double grid_step = 0.0;
    double p_step = 0.0;

    std::size_t x_count() const;
    double x_at(std::size_t i) const {
        return x_lo + static_cast<double>(i) * grid_step;
    }
    std::size_t p_half_count() const;
    std::size_t p_count() const {
        return 2 * p_half_count() + 1;
    }
    double p_start() const {
        return -static_cast<double>(p_half_count()) * p_step;
    }

    /// Throws DomainError describing the first broken field.
    void validate() const;
};

/// Plans truncation for the comb regime (spikes at sqrt(2)(n - beta)).
TruncationPolicy truncation_plan(double alpha, double r, double beta, double tolerance = kDefaultTolerance);

/// Plans truncation for arbitrary encoding parameters. Coincides with the
/// three-parameter overload in the comb regime.
TruncationPolicy truncation_plan(const EncodingParams &params, double tolerance = kDefaultTolerance);

/// Orthonormal Hermite function <X|n> = pi^{-1/4} (2^n n!)^{-1/2} H_n(X) e^{-X^2/2}.
double hermite_function(int n, double x);

/// Fills out[n] = hermite_function(n, x) for n = 0 .. out.size()-1 in one pass.
void hermite_functions(double x, std::span<double> out);

double log_factorial(int n);

/// log((2m)!!) = m log 2 + log m!.
double log_double_factorial_even(int m);

/// log of the Poisson probability mass e^{-mean} mean^n / n!. Returns -inf
/// for mean == 0, n > 0.
double poisson_log_pmf(int n, double mean);

/// sum_{k > n} Poisson(k; mean).
double poisson_upper_tail(int n, double mean);

/// sum_{k < n} Poisson(k; mean).
double poisson_lower_tail(int n, double mean);

namespace detail {

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
double gauss_kronrod_15(F &f, double a, double b, double &err) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = static_cast<double>(f(center));
    if (!std::isfinite(fc)) {
        throw DomainError("integrand is not finite at x = " + std::to_string(center));
    }
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double f1 = static_cast<double>(f(center - dx));
        const double f2 = static_cast<double>(f(center + dx));
        if (!std::isfinite(f1) || !std::isfinite(f2)) {
            throw DomainError("integrand is not finite near x = " + std::to_string(center));
        }
        kronrod += kKronrodWeights[j] * (f1 + f2);
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * (f1 + f2);
        }
    }
    err = std::abs((kronrod - gauss) * half);
    return kronrod * half;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [lo, hi] to absolute
/// tolerance `tol`.
///
/// The interval is first cut into `initial_panels` equal panels, then panels
/// are bisected depth-first until each meets its length-proportional share of
/// `tol`. The traversal order is fixed so results are bit-reproducible.
/// Panels narrower than the spike scale of the integrand should be requested
/// through `initial_panels`; a narrow peak that falls between all 15 nodes of
/// a panel is invisible to the error estimate.
template <class F>
double integrate(F &&f, double lo, double hi, double tol, int initial_panels = 1, int max_depth = 50) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("integrate: need finite lo <= hi");
    }
    if (!(tol > 0.0)) {
        throw DomainError("integrate: tolerance must be positive");
    }
    if (initial_panels < 1) {
        throw DomainError("integrate: initial_panels must be >= 1");
    }
    if (lo == hi) {
        return 0.0;
    }
    struct Panel {
        double a;
        double b;
        int depth;
    };
    const double width = hi - lo;
    std::vector<Panel> stack;
    stack.reserve(static_cast<std::size_t>(initial_panels) + 2 * static_cast<std::size_t>(max_depth));
    for (int i = initial_panels - 1; i >= 0; --i) {
        const double a = lo + width * i / initial_panels;
        const double b = (i + 1 == initial_panels) ? hi : lo + width * (i + 1) / initial_panels;
        stack.push_back({a, b, 0});
    }
    double total = 0.0;
    double total_err = 0.0;
    bool failed = false;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        double err = 0.0;
        const double value = detail::gauss_kronrod_15(f, p.a, p.b, err);
        const double local_tol = tol * (p.b - p.a) / width;
        const double mid = 0.5 * (p.a + p.b);
        const bool unsplittable = !(p.a < mid && mid < p.b);
        if (err <= local_tol || unsplittable) {
            total += value;
            total_err += err;
            continue;
        }
        if (p.depth >= max_depth) {
            failed = true;
            total += value;
            total_err += err;
            continue;
        }
        stack.push_back({mid, p.b, p.depth + 1});
        stack.push_back({p.a, mid, p.depth + 1});
    }
    if (failed) {
        throw QuadratureError("integrate: depth limit reached before tolerance was met", total, total_err);
    }
    return total;
}

}  // namespace ioncomb

#endif
