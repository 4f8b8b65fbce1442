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

#include "ioncomb/wavefunction.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ioncomb/errors.h"

namespace ioncomb {

const char *axis_name(Axis axis) {
    return axis == Axis::position ? "position" : "momentum";
}

bool Wavefunction::same_grid(const Wavefunction &other) const {
    const double tol = 1e-12 * std::max(1.0, std::abs(step));
    return axis == other.axis && amplitudes.size() == other.amplitudes.size() && std::abs(start - other.start) <= tol &&
           std::abs(step - other.step) <= tol;
}

double norm_squared(const Wavefunction &wf) {
    double sum = 0.0;
    for (const Complex &a : wf.amplitudes) {
        sum += std::norm(a);
    }
    return sum * wf.step;
}

void normalize(Wavefunction &wf) {
    const double n2 = norm_squared(wf);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw DegenerateStateError("cannot normalize a wavefunction with zero or non-finite norm");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (Complex &a : wf.amplitudes) {
        a *= scale;
    }
    wf.normalized = true;
}

Complex overlap(const Wavefunction &wf1, const Wavefunction &wf2) {
    if (!wf1.same_grid(wf2)) {
        throw DomainError("overlap: wavefunctions live on different grids");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < wf1.size(); ++i) {
        sum += std::conj(wf1.amplitudes[i]) * wf2.amplitudes[i];
    }
    return sum * wf1.step;
}

Wavefunction linear_combination(Complex a, const Wavefunction &wf1, Complex b, const Wavefunction &wf2) {
    if (!wf1.same_grid(wf2)) {
        throw DomainError("linear_combination: wavefunctions live on different grids");
    }
    Wavefunction out{wf1.axis, wf1.start, wf1.step, {}, false};
    out.amplitudes.resize(wf1.size());
    for (std::size_t i = 0; i < wf1.size(); ++i) {
        out.amplitudes[i] = a * wf1.amplitudes[i] + b * wf2.amplitudes[i];
    }
    return out;
}

double probability_in(const Wavefunction &wf, double lo, double hi) {
    if (wf.size() < 2 || !(lo < hi)) {
        return 0.0;
    }
    const double first = wf.start;
    const double last = wf.end();
    lo = std::max(lo, first);
    hi = std::min(hi, last);
    if (!(lo < hi)) {
        return 0.0;
    }
    const auto cell_of = [&](double x) {
        const double idx = std::floor((x - first) / wf.step);
        return static_cast<std::size_t>(std::clamp(idx, 0.0, static_cast<double>(wf.size() - 2)));
    };
    const auto density_at = [&](std::size_t i, double x) {
        const double f0 = std::norm(wf.amplitudes[i]);
        const double f1 = std::norm(wf.amplitudes[i + 1]);
        const double t = (x - wf.coordinate(i)) / wf.step;
        return f0 + (f1 - f0) * t;
    };
    const std::size_t i_lo = cell_of(lo);
    const std::size_t i_hi = cell_of(hi);
    double sum = 0.0;
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
        const double a = std::max(lo, wf.coordinate(i));
        const double b = std::min(hi, wf.coordinate(i + 1));
        if (b > a) {
            sum += 0.5 * (b - a) * (density_at(i, a) + density_at(i, b));
        }
    }
    return sum;
}

Wavefunction fourier_transform(const Wavefunction &position, double p_start, double p_step, std::size_t count) {
    if (position.axis != Axis::position) {
        throw DomainError("fourier_transform: input must be on the position axis");
    }
    Wavefunction out{Axis::momentum, p_start, p_step, {}, false};
    out.amplitudes.assign(count, Complex{0.0, 0.0});
    const std::size_t n = position.size();
    if (n == 0) {
        return out;
    }
    const double prefactor = position.step / std::sqrt(2.0 * std::numbers::pi);
    // The running phase e^{-i p x_i} is re-anchored every kAnchor samples so
    // that rounding in the rotation recurrence stays at the 1e-15 level.
    constexpr std::size_t kAnchor = 64;
    for (std::size_t j = 0; j < count; ++j) {
        const double p = p_start + static_cast<double>(j) * p_step;
        const Complex rotation = std::polar(1.0, -p * position.step);
        Complex phase;
        Complex sum{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            if (i % kAnchor == 0) {
                phase = std::polar(1.0, -p * position.coordinate(i));
            }
            const double weight = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
            sum += weight * position.amplitudes[i] * phase;
            phase *= rotation;
        }
        out.amplitudes[j] = prefactor * sum;
    }
    out.normalized = position.normalized;
    return out;
}

void remove_global_phase(Wavefunction &wf) {
    if (wf.amplitudes.empty()) {
        return;
    }
    const auto it = std::max_element(wf.amplitudes.begin(), wf.amplitudes.end(),
                                     [](const Complex &a, const Complex &b) { return std::norm(a) < std::norm(b); });
    if (std::abs(*it) == 0.0) {
        return;
    }
    const Complex phase = std::conj(*it) / std::abs(*it);
    for (Complex &a : wf.amplitudes) {
        a *= phase;
    }
}

}  // namespace ioncomb
