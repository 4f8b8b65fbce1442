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

#include "ioncomb/dynamics.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "ioncomb/error_analysis.h"
#include "ioncomb/errors.h"

namespace ioncomb {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kUnderflowExponent = -745.0;

Complex exp_or_zero(Complex z) {
    return z.real() < kUnderflowExponent ? Complex{0.0, 0.0} : std::exp(z);
}

void check_window(double X_lo, double X_hi) {
    if (!std::isfinite(X_lo) || !std::isfinite(X_hi) || !(X_lo < X_hi)) {
        throw DomainError("window: need finite X_lo < X_hi");
    }
}

}  // namespace

Complex zeta_n(int n, double k, double tau) {
    return static_cast<double>(n) * k * (std::polar(1.0, tau) - 1.0);
}

Complex ConditionalCoefficients::b(int n) const {
    if (n < 0 || n > n_max) {
        return {0.0, 0.0};
    }
    return exp_or_zero(log_b[static_cast<std::size_t>(n)]);
}

ConditionalCoefficients conditional_coefficients(const EncodingParams &params, const TruncationPolicy &trunc) {
    require_valid(params);
    trunc.validate();
    const Complex gamma = params.gamma();
    const double beta = params.beta;
    const double alpha = params.alpha;

    ConditionalCoefficients c;
    c.n_max = trunc.n_max;
    c.log_a = -0.5 * std::log(std::cosh(params.r)) - 0.5 * (gamma * beta * beta + alpha * alpha);
    c.log_b.resize(static_cast<std::size_t>(c.n_max) + 1);
    c.zeta.resize(static_cast<std::size_t>(c.n_max) + 1);
    const double kerr = params.k * params.k * (params.tau - std::sin(params.tau));
    const double log_alpha = alpha > 0.0 ? std::log(alpha) : -std::numeric_limits<double>::infinity();
    for (int n = 0; n <= c.n_max; ++n) {
        const Complex z = zeta_n(n, params.k, params.tau);
        const Complex zc = std::conj(z);
        const double magnitude = n == 0 ? 0.0 : n * log_alpha - 0.5 * log_factorial(n);
        const Complex phase{0.0, kerr * static_cast<double>(n) * n};
        const Complex log_b = magnitude + phase - gamma * zc * (beta + 0.5 * zc) - 0.5 * std::norm(beta + z);
        c.log_b[static_cast<std::size_t>(n)] = std::isfinite(magnitude)
                                                   ? log_b
                                                   : Complex{-std::numeric_limits<double>::infinity(), 0.0};
        c.zeta[static_cast<std::size_t>(n)] = z;
    }
    return c;
}

ConditionalState::ConditionalState(const EncodingParams &params, const TruncationPolicy &trunc)
    : params_(params), trunc_(trunc), coeffs_(conditional_coefficients(params, trunc)) {
    const Complex gamma = params.gamma();
    const Complex e2 = std::polar(1.0, 2.0 * params.tau);
    const Complex inv = 1.0 / (2.0 * (gamma - e2));
    const Complex singular = 1.0 - gamma * std::conj(e2);
    if (std::abs(singular) < 1e-300) {
        throw DomainError("conditional state: 1 - Gamma e^{-2i tau} vanishes");
    }
    prefactor_ = 1.0 / (std::sqrt(std::sqrt(std::numbers::pi)) * std::sqrt(singular));
    quadratic_ = inv * (gamma + e2);
    const Complex linear_scale = -inv * 2.0 * kSqrt2 * std::polar(1.0, params.tau);
    for (int n = 0; n <= coeffs_.n_max; ++n) {
        const Complex log_b = coeffs_.log_b[static_cast<std::size_t>(n)];
        if (!std::isfinite(log_b.real())) {
            continue;
        }
        const Complex z = coeffs_.zeta[static_cast<std::size_t>(n)];
        const Complex cn = gamma * std::conj(params.beta + z) + params.beta + z;
        terms_.push_back({n, coeffs_.log_a + log_b + inv * cn * cn, linear_scale * cn});
    }
}

Complex ConditionalState::amplitude(double X, double x) const {
    std::vector<double> h(static_cast<std::size_t>(coeffs_.n_max) + 1);
    hermite_functions(X, h);
    Complex sum{0.0, 0.0};
    for (const Term &t : terms_) {
        const double hn = h[static_cast<std::size_t>(t.n)];
        if (hn != 0.0) {
            sum += hn * exp_or_zero(t.c0 + t.c1 * x + quadratic_ * (x * x));
        }
    }
    return prefactor_ * sum;
}

Wavefunction ConditionalState::wavefunction(double X, bool normalize) const {
    if (!std::isfinite(X)) {
        throw DomainError("conditional wavefunction: X must be finite");
    }
    std::vector<double> h(static_cast<std::size_t>(coeffs_.n_max) + 1);
    hermite_functions(X, h);
    Wavefunction wf{Axis::position, trunc_.x_lo, trunc_.grid_step, {}, false};
    const std::size_t count = trunc_.x_count();
    wf.amplitudes.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = trunc_.x_at(i);
        const Complex q = quadratic_ * (x * x);
        Complex sum{0.0, 0.0};
        for (const Term &t : terms_) {
            const double hn = h[static_cast<std::size_t>(t.n)];
            if (hn != 0.0) {
                sum += hn * exp_or_zero(t.c0 + t.c1 * x + q);
            }
        }
        wf.amplitudes[i] = prefactor_ * sum;
    }
    if (normalize) {
        ioncomb::normalize(wf);
    }
    return wf;
}

double ConditionalState::density(double X) const {
    return norm_squared(wavefunction(X, false));
}

HomodyneDistribution::HomodyneDistribution(const ConditionalState &state) : n_max_(state.coeffs_.n_max) {
    const auto &terms = state.terms_;
    const double a = 2.0 * state.quadratic_.real();
    if (!(a < 0.0)) {
        throw DomainError("homodyne distribution: components are not normalizable");
    }
    const double scale = std::norm(state.prefactor_) * std::sqrt(std::numbers::pi / -a);
    const std::size_t n = terms.size();
    ns_.reserve(n);
    for (const auto &t : terms) {
        ns_.push_back(t.n);
    }
    gram_re_.assign(n * n, 0.0);
    // int exp(a x^2 + b x + c) dx = sqrt(pi / -a) exp(c - b^2 / (4 a)).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex b = terms[i].c1 + std::conj(terms[j].c1);
            const Complex c = terms[i].c0 + std::conj(terms[j].c0);
            const double g = scale * exp_or_zero(c - b * b / (4.0 * a)).real();
            gram_re_[i * n + j] = g;
            gram_re_[j * n + i] = g;
        }
    }
}

double HomodyneDistribution::density(double X) const {
    std::vector<double> h(static_cast<std::size_t>(n_max_) + 1);
    hermite_functions(X, h);
    const std::size_t n = ns_.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = h[static_cast<std::size_t>(ns_[i])];
        if (hi == 0.0) {
            continue;
        }
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row += gram_re_[i * n + j] * h[static_cast<std::size_t>(ns_[j])];
        }
        sum += hi * row;
    }
    return std::max(sum, 0.0);
}

Wavefunction conditional_wavefunction(const EncodingParams &params, double X, const TruncationPolicy &trunc,
                                      bool normalize) {
    return ConditionalState(params, trunc).wavefunction(X, normalize);
}

double homodyne_density(const EncodingParams &params, double X, const TruncationPolicy &trunc) {
    return HomodyneDistribution(ConditionalState(params, trunc)).density(X);
}

double window_probability(const EncodingParams &params, double X_lo, double X_hi, const TruncationPolicy &trunc) {
    check_window(X_lo, X_hi);
    const HomodyneDistribution dist{ConditionalState(params, trunc)};
    const int panels = std::max(1, static_cast<int>(std::ceil(4.0 * (X_hi - X_lo))));
    return integrate([&](double X) { return dist.density(X); }, X_lo, X_hi, 1e-12, panels);
}

WindowAcceptance window_acceptance(const EncodingParams &params, double X_lo, double X_hi,
                                   const TruncationPolicy &trunc, int error_samples) {
    check_window(X_lo, X_hi);
    if (error_samples < 3 || error_samples % 2 == 0) {
        throw DomainError("window_acceptance: error_samples must be odd and >= 3");
    }
    WindowAcceptance out;
    out.probability = window_probability(params, X_lo, X_hi, trunc);

    const ConditionalState zero_state(params, trunc);
    const ConditionalState one_state(params.with_beta(params.beta + 1.0), trunc);
    const HomodyneDistribution dist(zero_state);
    const double h = (X_hi - X_lo) / (error_samples - 1);
    double weighted = 0.0;
    double weight_total = 0.0;
    for (int i = 0; i < error_samples; ++i) {
        const double X = X_lo + h * i;
        const double simpson = (i == 0 || i == error_samples - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double density = dist.density(X);
        if (density <= 0.0) {
            continue;
        }
        const ErrorReport report =
            grid_error_report(zero_state.wavefunction(X), one_state.wavefunction(X), params.beta, trunc);
        weighted += simpson * density * report.p_max;
        weight_total += simpson * density;
    }
    out.mean_error_bound = weight_total > 0.0 ? weighted / weight_total : std::numeric_limits<double>::quiet_NaN();
    return out;
}

}  // namespace ioncomb
