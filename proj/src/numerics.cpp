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

#include "ioncomb/numerics.h"

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>

#include "ioncomb/params.h"

namespace ioncomb {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// pi^{-1/4}
const double kInvPiQuarter = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));

int smallest_upper_cut(double mean, double tolerance) {
    int n = static_cast<int>(std::floor(mean));
    while (poisson_upper_tail(n, mean) >= tolerance) {
        ++n;
        if (n > 4 * kMaxPhotonNumber) {
            throw TruncationError("Poisson tail does not fall below tolerance");
        }
    }
    // The tail is monotone in n; step back while the cut still holds.
    while (n > 0 && poisson_upper_tail(n - 1, mean) < tolerance) {
        --n;
    }
    return n;
}

int largest_lower_cut(double mean, double tolerance) {
    int n = 0;
    while (poisson_lower_tail(n + 1, mean) < tolerance) {
        ++n;
    }
    return n;
}

void check_tolerance(double tolerance) {
    if (!(tolerance > 0.0 && tolerance <= 1e-4)) {
        throw DomainError("truncation tolerance must lie in (0, 1e-4]");
    }
}

}  // namespace

std::size_t TruncationPolicy::x_count() const {
    return static_cast<std::size_t>(std::ceil((x_hi - x_lo) / grid_step - 1e-9)) + 1;
}

std::size_t TruncationPolicy::p_half_count() const {
    return static_cast<std::size_t>(std::ceil(p_cut / p_step - 1e-9));
}

void TruncationPolicy::validate() const {
    if (!(tolerance > 0.0)) {
        throw DomainError("truncation: tolerance must be positive");
    }
    if (n_max < 0 || n_max > kMaxPhotonNumber) {
        throw TruncationError("truncation: n_max outside [0, " + std::to_string(kMaxPhotonNumber) + "]");
    }
    if (m_max < 0 || m_min < 0 || m_min > m_max) {
        throw DomainError("truncation: need 0 <= m_min <= m_max");
    }
    if (!(grid_step > 0.0) || !(p_step > 0.0) || !(p_cut > 0.0)) {
        throw DomainError("truncation: grid steps and p_cut must be positive");
    }
    if (!(x_lo < x_hi)) {
        throw DomainError("truncation: empty position window");
    }
}

TruncationPolicy truncation_plan(double alpha, double r, double beta, double tolerance) {
    check_tolerance(tolerance);
    if (!std::isfinite(alpha) || alpha < 0.0 || !std::isfinite(r) || r < 0.0 || !std::isfinite(beta)) {
        throw DomainError("truncation_plan: need finite alpha >= 0, r >= 0 and beta");
    }
    TruncationPolicy t;
    t.tolerance = tolerance;

    const double photon_mean = alpha * alpha;
    t.n_hi = smallest_upper_cut(photon_mean, tolerance);
    t.n_lo = largest_lower_cut(photon_mean, tolerance);
    t.n_max = std::max(t.n_hi, static_cast<int>(std::ceil(alpha * alpha + 10.0 * alpha + 20.0)));
    if (t.n_max > kMaxPhotonNumber) {
        throw TruncationError("truncation_plan: photon-number cutoff " + std::to_string(t.n_max) +
                              " exceeds the supported maximum");
    }

    const double spike_mean = 0.5 * alpha * alpha;
    t.m_max = smallest_upper_cut(spike_mean, tolerance);
    t.m_min = largest_lower_cut(spike_mean, tolerance);

    const double guard = 3.0 + 5.0 * std::exp(-r);
    const double lo_index = std::min(2 * t.m_min, t.n_lo);
    const double hi_index = std::max(2 * t.m_max, t.n_hi);
    // One extra lattice cell on the left keeps the beta + 1 comb (|1~>) inside.
    t.x_lo = kSqrt2 * (lo_index - beta - 1.0 - guard);
    t.x_hi = kSqrt2 * (hi_index - beta + guard);
    t.grid_step = std::exp(-r) / 20.0;

    t.p_cut = std::exp(r) * std::sqrt(2.0 * std::log(1.0 / tolerance));
    const double extent = std::max({std::abs(t.x_lo), std::abs(t.x_hi), 1.0});
    t.p_step = std::numbers::pi / (8.0 * extent);
    return t;
}

TruncationPolicy truncation_plan(const EncodingParams &params, double tolerance) {
    require_valid(params);
    if (params.is_comb_regime()) {
        return truncation_plan(params.alpha, params.r, params.beta, tolerance);
    }
    check_tolerance(tolerance);
    TruncationPolicy t = truncation_plan(params.alpha, params.r, 0.0, tolerance);

    // Component n is a displaced squeezed state centred at
    // sqrt(2) (Re c_n, Im c_n) with c_n = beta e^{-i tau} + n k (1 - e^{-i tau}).
    const std::complex<double> rot = std::polar(1.0, -params.tau);
    auto center = [&](int n) { return params.beta * rot + static_cast<double>(n) * params.k * (1.0 - rot); };
    const std::complex<double> c_lo = center(t.n_lo);
    const std::complex<double> c_hi = center(t.n_hi);
    const double theta = 2.0 * params.phi - 2.0 * params.tau;
    const double var_x = 0.5 * (std::cosh(2.0 * params.r) - std::sinh(2.0 * params.r) * std::cos(theta));
    const double var_p = 0.5 * (std::cosh(2.0 * params.r) + std::sinh(2.0 * params.r) * std::cos(theta));
    const double sigma_x = std::sqrt(var_x);
    const double sigma_p = std::sqrt(var_p);

    const double guard_x = 3.0 * kSqrt2 + 10.0 * sigma_x;
    t.x_lo = kSqrt2 * std::min(c_lo.real(), c_hi.real()) - guard_x;
    t.x_hi = kSqrt2 * std::max(c_lo.real(), c_hi.real()) + guard_x;
    const double p_center = kSqrt2 * std::max(std::abs(c_lo.imag()), std::abs(c_hi.imag()));
    const double bandwidth = p_center + 10.0 * sigma_p + 3.0;
    t.grid_step = std::min(std::exp(-params.r) / 20.0, std::numbers::pi / (8.0 * bandwidth));
    t.p_cut = p_center + std::exp(params.r) * std::sqrt(2.0 * std::log(1.0 / tolerance));
    const double extent = std::max({std::abs(t.x_lo), std::abs(t.x_hi), 1.0});
    t.p_step = std::numbers::pi / (8.0 * extent);
    return t;
}

void hermite_functions(double x, std::span<double> out) {
    if (out.empty()) {
        return;
    }
    // Normalized three-term recurrence on (psi_{n-1}, psi_n) with e^{-x^2/2}
    // and an overflow scale factored out; both are reapplied per order.
    constexpr double kRescale = 1e150;
    const double log_rescale = std::log(kRescale);
    const double base = -0.5 * x * x;
    double scale = 0.0;
    double prev = 0.0;
    double cur = kInvPiQuarter;
    out[0] = cur * std::exp(base);
    for (std::size_t n = 0; n + 1 < out.size(); ++n) {
        const double nn = static_cast<double>(n);
        const double next = x * std::sqrt(2.0 / (nn + 1.0)) * cur - std::sqrt(nn / (nn + 1.0)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescale) {
            cur /= kRescale;
            prev /= kRescale;
            scale += log_rescale;
        }
        out[n + 1] = cur == 0.0 ? 0.0 : cur * std::exp(base + scale);
    }
}

double hermite_function(int n, double x) {
    if (n < 0) {
        throw DomainError("hermite_function: n must be >= 0");
    }
    std::vector<double> values(static_cast<std::size_t>(n) + 1);
    hermite_functions(x, values);
    return values.back();
}

double log_factorial(int n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_double_factorial_even(int m) {
    return m * std::numbers::ln2 + log_factorial(m);
}

double poisson_log_pmf(int n, double mean) {
    if (n < 0) {
        return -std::numeric_limits<double>::infinity();
    }
    if (mean == 0.0) {
        return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    return -mean + n * std::log(mean) - log_factorial(n);
}

double poisson_upper_tail(int n, double mean) {
    if (n < 0) {
        return 1.0;
    }
    if (mean == 0.0) {
        return 0.0;
    }
    // Terms past the mode decrease geometrically; stop once they no longer
    // change the sum.
    double sum = 0.0;
    for (int k = n + 1;; ++k) {
        const double term = std::exp(poisson_log_pmf(k, mean));
        sum += term;
        if (k > mean + 1.0 && term <= sum * 1e-17) {
            break;
        }
        if (k > n + 100000) {
            break;
        }
    }
    return sum;
}

double poisson_lower_tail(int n, double mean) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        sum += std::exp(poisson_log_pmf(k, mean));
    }
    return sum;
}

}  // namespace ioncomb
