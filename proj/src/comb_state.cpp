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

#include "ioncomb/comb_state.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ioncomb/errors.h"

namespace ioncomb {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kUnderflowExponent = 745.0;
constexpr double kDegenerateNorm = 1e-12;

// sum_m nu_m Omega_m(x) with the spikes centred at sqrt(2)(2m - beta).
double comb_value(const NuWeights &nu, double r, double beta, double x) {
    const double width = std::exp(2.0 * r);
    const double prefactor = std::exp(0.5 * r) / std::sqrt(std::numbers::pi);
    double sum = 0.0;
    for (int m = nu.m_min; m <= nu.m_max; ++m) {
        const double d = x - kSqrt2 * (2.0 * m - beta);
        const double exponent = 0.5 * width * d * d;
        if (exponent < kUnderflowExponent) {
            sum += nu[m] * std::exp(-exponent);
        }
    }
    return prefactor * sum;
}

void require_unit_amplitudes(const CodewordLabel &label) {
    const double n2 = std::norm(label.a) + std::norm(label.b);
    if (std::abs(n2 - 1.0) > 1e-9) {
        throw DomainError("codeword: superposition amplitudes must satisfy |a|^2 + |b|^2 = 1");
    }
}

}  // namespace

const char *sign_symbol(Sign s) {
    return s == Sign::plus ? "+" : "-";
}

NuWeights nu_weights(double alpha, double tolerance) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw DomainError("nu_weights: alpha must be finite and >= 0");
    }
    if (!(tolerance > 0.0)) {
        throw DomainError("nu_weights: tolerance must be positive");
    }
    const double mean = 0.5 * alpha * alpha;
    NuWeights nu;
    nu.alpha = alpha;
    int m_max = static_cast<int>(std::floor(mean));
    while (poisson_upper_tail(m_max, mean) >= tolerance) {
        ++m_max;
    }
    int m_min = 0;
    while (poisson_lower_tail(m_min + 1, mean) < tolerance) {
        ++m_min;
    }
    nu.m_max = m_max;
    nu.m_min = m_min;
    nu.values.resize(static_cast<std::size_t>(m_max) + 1, 0.0);
    if (alpha == 0.0) {
        nu.values[0] = 1.0;
    } else {
        const double log_alpha = std::log(alpha);
        for (int m = 0; m <= m_max; ++m) {
            nu.values[static_cast<std::size_t>(m)] =
                std::exp(-mean + 2.0 * m * log_alpha - log_double_factorial_even(m));
        }
    }
    nu.tail_bound = poisson_upper_tail(m_max, mean);
    return nu;
}

NuWeights nu_weights(double alpha, const TruncationPolicy &trunc) {
    NuWeights nu = nu_weights(alpha, trunc.tolerance);
    if (nu.m_max < trunc.m_max) {
        const double mean = 0.5 * alpha * alpha;
        const double log_alpha = alpha > 0.0 ? std::log(alpha) : 0.0;
        nu.values.resize(static_cast<std::size_t>(trunc.m_max) + 1, 0.0);
        for (int m = nu.m_max + 1; m <= trunc.m_max; ++m) {
            nu.values[static_cast<std::size_t>(m)] =
                alpha > 0.0 ? std::exp(-mean + 2.0 * m * log_alpha - log_double_factorial_even(m)) : 0.0;
        }
        nu.m_max = trunc.m_max;
        nu.tail_bound = poisson_upper_tail(nu.m_max, mean);
    }
    return nu;
}

CodewordLabel CodewordLabel::of(Codeword c) {
    const double h = 1.0 / std::numbers::sqrt2;
    switch (c) {
        case Codeword::zero:
            return {{1.0, 0.0}, {0.0, 0.0}};
        case Codeword::one:
            return {{0.0, 0.0}, {1.0, 0.0}};
        case Codeword::plus:
            return {{h, 0.0}, {h, 0.0}};
        case Codeword::minus:
            return {{h, 0.0}, {-h, 0.0}};
    }
    throw DomainError("invalid codeword label");
}

double zero_outcome_density(double alpha, double r, double tolerance) {
    if (!std::isfinite(r) || r < 0.0) {
        throw DomainError("zero_outcome_density: r must be finite and >= 0");
    }
    const NuWeights nu = nu_weights(alpha, tolerance);
    const double width = 2.0 * std::exp(2.0 * r);
    double sum = 0.0;
    for (int d = 0; d <= nu.m_max; ++d) {
        const double exponent = width * d * d;
        if (exponent > kUnderflowExponent) {
            break;
        }
        double partial = 0.0;
        for (int m = d; m <= nu.m_max; ++m) {
            partial += nu[m] * nu[m - d];
        }
        sum += (d == 0 ? 1.0 : 2.0) * partial * std::exp(-exponent);
    }
    return sum / std::sqrt(std::numbers::pi);
}

CombState::CombState(const EncodingParams &params, const TruncationPolicy &trunc) : params_(params), trunc_(trunc) {
    require_comb_regime(params, "comb state");
    trunc.validate();
    nu_ = nu_weights(params.alpha, trunc);
    density_ = ioncomb::zero_outcome_density(params.alpha, params.r, trunc.tolerance);
    norm_ = 1.0 / std::sqrt(density_);

    const std::size_t count = trunc.x_count();
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double x = trunc.x_at(i);
        sum += comb_value(nu_, params.r, params.beta, x) * comb_value(nu_, params.r, params.beta + 1.0, x);
    }
    overlap_ = Complex{norm_ * norm_ * trunc.grid_step * sum, 0.0};
    if (std::abs(overlap_.imag()) > 1e-10) {
        throw DomainError("comb state: <0~|1~> is not real");
    }
}

double CombState::phi(double x) const {
    return norm_ * comb_value(nu_, params_.r, params_.beta, x);
}

Complex CombState::comb_sum(double p) const {
    Complex sum{0.0, 0.0};
    for (int m = nu_.m_min; m <= nu_.m_max; ++m) {
        sum += nu_[m] * std::polar(1.0, -2.0 * kSqrt2 * m * p);
    }
    return sum;
}

Complex CombState::psi(double p) const {
    const double envelope =
        norm_ / std::sqrt(std::numbers::pi) * std::exp(-0.5 * (params_.r + std::exp(-2.0 * params_.r) * p * p));
    return envelope * std::polar(1.0, kSqrt2 * params_.beta * p) * comb_sum(p);
}

double CombState::pm_norm_squared(Sign s) const {
    const double re = overlap_.real();
    return 2.0 * (s == Sign::plus ? 1.0 + re : 1.0 - re);
}

Complex CombState::psi_pm(Sign s, double p) const {
    const double n2 = pm_norm_squared(s);
    if (n2 <= kDegenerateNorm) {
        throw DegenerateStateError("psi_pm: (|0~> - |1~>) has vanishing norm");
    }
    const double envelope = norm_ / std::sqrt(std::numbers::pi * n2) *
                            std::exp(-0.5 * (params_.r + std::exp(-2.0 * params_.r) * p * p));
    const Complex shift = std::polar(1.0, kSqrt2 * p);
    const Complex interference = s == Sign::plus ? 1.0 + shift : 1.0 - shift;
    return envelope * std::polar(1.0, kSqrt2 * params_.beta * p) * interference * comb_sum(p);
}

Wavefunction phi0(const EncodingParams &params, const TruncationPolicy &trunc) {
    return codeword(Codeword::zero, params, trunc, Axis::position);
}

Wavefunction psi0(const EncodingParams &params, const TruncationPolicy &trunc) {
    return codeword(Codeword::zero, params, trunc, Axis::momentum);
}

Wavefunction codeword(const CodewordLabel &label, const EncodingParams &params, const TruncationPolicy &trunc,
                      Axis axis) {
    require_unit_amplitudes(label);
    const CombState state(params, trunc);
    const Complex a = label.a;
    const Complex b = label.b;
    const double n2 = std::norm(a) + std::norm(b) + 2.0 * std::real(std::conj(a) * b * state.codeword_overlap());
    if (n2 <= kDegenerateNorm) {
        throw DegenerateStateError("codeword: superposition has vanishing norm");
    }
    const double scale = 1.0 / std::sqrt(n2);

    Wavefunction wf;
    wf.axis = axis;
    wf.normalized = true;
    if (axis == Axis::position) {
        const double norm = state.normalization();
        const std::size_t count = trunc.x_count();
        wf.start = trunc.x_lo;
        wf.step = trunc.grid_step;
        wf.amplitudes.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double x = trunc.x_at(i);
            const double zero = b == 0.0 || a != 0.0 ? state.phi(x) : 0.0;
            const double one = b != 0.0 ? norm * comb_value(state.nu(), params.r, params.beta + 1.0, x) : 0.0;
            wf.amplitudes[i] = scale * (a * zero + b * one);
        }
    } else {
        const std::size_t count = trunc.p_count();
        wf.start = trunc.p_start();
        wf.step = trunc.p_step;
        wf.amplitudes.resize(count);
        for (std::size_t j = 0; j < count; ++j) {
            const double p = wf.coordinate(j);
            const Complex zero = state.psi(p);
            // |1~> is the beta -> beta + 1 comb: an extra e^{i sqrt(2) p}.
            const Complex one = zero * std::polar(1.0, kSqrt2 * p);
            wf.amplitudes[j] = scale * (a * zero + b * one);
        }
    }
    return wf;
}

Wavefunction psi_pm(Sign s, const EncodingParams &params, const TruncationPolicy &trunc) {
    const CombState state(params, trunc);
    Wavefunction wf{Axis::momentum, trunc.p_start(), trunc.p_step, {}, true};
    wf.amplitudes.resize(trunc.p_count());
    for (std::size_t j = 0; j < wf.size(); ++j) {
        wf.amplitudes[j] = state.psi_pm(s, wf.coordinate(j));
    }
    return wf;
}

Complex codeword_overlap(const EncodingParams &params, const TruncationPolicy &trunc) {
    return CombState(params, trunc).codeword_overlap();
}

SpikeStatistics spike_statistics(double alpha, double tolerance) {
    const NuWeights nu = nu_weights(alpha, tolerance);
    double total = 0.0;
    double first = 0.0;
    for (int m = 0; m <= nu.m_max; ++m) {
        total += nu[m];
        first += m * nu[m];
    }
    SpikeStatistics s;
    s.m_bar = first / total;
    double second = 0.0;
    for (int m = 0; m <= nu.m_max; ++m) {
        const double d = m - s.m_bar;
        second += d * d * nu[m];
    }
    s.delta_m = std::sqrt(second / total);
    s.m_bar_approx = 0.5 * alpha * alpha;
    s.delta_m_approx = alpha / std::numbers::sqrt2;
    return s;
}

}  // namespace ioncomb
