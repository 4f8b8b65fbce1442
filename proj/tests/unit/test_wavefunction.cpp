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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ioncomb/errors.h"

using namespace ioncomb;

namespace {

// Gaussian of position width s centred at c, momentum offset k0.
Wavefunction gaussian(double c, double s, double k0, double lo = -20.0, double hi = 20.0, double h = 0.01) {
    Wavefunction wf{Axis::position, lo, h, {}, false};
    const std::size_t n = static_cast<std::size_t>(std::round((hi - lo) / h)) + 1;
    const double norm = std::pow(std::numbers::pi * s * s, -0.25);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = lo + h * i;
        wf.amplitudes.push_back(norm * std::exp(-(x - c) * (x - c) / (2 * s * s)) * std::polar(1.0, k0 * x));
    }
    return wf;
}

}  // namespace

TEST(wavefunction, norm_and_normalize) {
    Wavefunction wf = gaussian(0.5, 0.8, 0.0);
    EXPECT_NEAR(norm_squared(wf), 1.0, 1e-12);
    for (auto &a : wf.amplitudes) {
        a *= 3.0;
    }
    normalize(wf);
    EXPECT_TRUE(wf.normalized);
    EXPECT_NEAR(norm_squared(wf), 1.0, 1e-12);

    Wavefunction zero{Axis::position, 0.0, 0.1, std::vector<Complex>(10), false};
    EXPECT_THROW(normalize(zero), DegenerateStateError);
}

TEST(wavefunction, overlap_of_displaced_gaussians) {
    const Wavefunction a = gaussian(0.0, 1.0, 0.0);
    const Wavefunction b = gaussian(1.0, 1.0, 0.0);
    EXPECT_NEAR(overlap(a, b).real(), std::exp(-0.25), 1e-12);
    EXPECT_NEAR(overlap(a, b).imag(), 0.0, 1e-15);
    const Wavefunction c = gaussian(0.0, 1.0, 0.0, -20.0, 20.0, 0.02);
    EXPECT_THROW(overlap(a, c), DomainError);
    EXPECT_THROW(linear_combination(1.0, a, 1.0, c), DomainError);
}

TEST(wavefunction, linear_combination_is_pointwise) {
    const Wavefunction a = gaussian(0.0, 1.0, 0.0);
    const Wavefunction b = gaussian(2.0, 1.0, 0.0);
    const Wavefunction s = linear_combination(2.0, a, Complex{0.0, 1.0}, b);
    for (std::size_t i = 0; i < s.size(); i += 97) {
        EXPECT_EQ(s.amplitudes[i], (2.0 * a.amplitudes[i] + Complex(0.0, 1.0) * b.amplitudes[i]));
    }
    EXPECT_FALSE(s.normalized);
}

TEST(wavefunction, probability_in_is_exact_for_linear_density) {
    // |a|^2 = x on [0, 1] is reproduced exactly by linear interpolation.
    Wavefunction wf{Axis::position, 0.0, 0.25, {}, false};
    for (int i = 0; i <= 4; ++i) {
        wf.amplitudes.emplace_back(std::sqrt(0.25 * i), 0.0);
    }
    EXPECT_NEAR(probability_in(wf, 0.1, 0.7), (0.49 - 0.01) / 2, 1e-15);
    EXPECT_NEAR(probability_in(wf, -5.0, 5.0), 0.5, 1e-15);
    EXPECT_EQ(probability_in(wf, 0.7, 0.1), 0.0);
    EXPECT_EQ(probability_in(wf, 2.0, 3.0), 0.0);
}

TEST(wavefunction, fourier_transform_of_gaussian) {
    const double s = 0.7;
    const double c = 1.3;
    const double k0 = 0.9;
    const Wavefunction wf = gaussian(c, s, k0, -15.0, 15.0, 0.02);
    const Wavefunction ft = fourier_transform(wf, -6.0, 0.05, 241);
    const double norm = std::pow(s * s / std::numbers::pi, 0.25);
    for (std::size_t j = 0; j < ft.size(); ++j) {
        const double p = ft.coordinate(j);
        const Complex expected = norm * std::exp(-(p - k0) * (p - k0) * s * s / 2) * std::polar(1.0, -(p - k0) * c);
        ASSERT_LT(std::abs(ft.amplitudes[j] - expected), 1e-12) << p;
    }
    EXPECT_EQ(ft.axis, Axis::momentum);
    EXPECT_THROW(fourier_transform(ft, 0.0, 0.1, 3), DomainError);
}

TEST(wavefunction, remove_global_phase_makes_peak_real) {
    Wavefunction wf = gaussian(0.0, 1.0, 0.0);
    for (auto &a : wf.amplitudes) {
        a *= std::polar(1.0, 1.234);
    }
    remove_global_phase(wf);
    const auto mid = wf.amplitudes[wf.size() / 2];
    EXPECT_NEAR(mid.imag(), 0.0, 1e-15);
    EXPECT_GT(mid.real(), 0.0);
}

TEST(wavefunction, grid_geometry) {
    const Wavefunction wf = gaussian(0.0, 1.0, 0.0, -1.0, 1.0, 0.5);
    EXPECT_EQ(wf.size(), 5u);
    EXPECT_DOUBLE_EQ(wf.end(), 1.0);
    EXPECT_STREQ(axis_name(Axis::momentum), "momentum");
}
