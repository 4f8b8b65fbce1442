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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ioncomb/comb_state.h"
#include "ioncomb/errors.h"
#include "ioncomb/params.h"
#include "unit/oracles.h"

using namespace ioncomb;

TEST(hermite, matches_multiprecision_polynomials) {
    for (int n : {0, 1, 2, 5, 17, 40, 100, 200}) {
        for (double x : {-9.5, -3.3, 0.0, 0.7, 4.2, 12.0}) {
            const double expected = oracle::hermite_function(static_cast<unsigned>(n), x);
            const double got = hermite_function(n, x);
            EXPECT_NEAR(got, expected, 1e-13 + 1e-10 * std::abs(expected)) << "n=" << n << " x=" << x;
        }
    }
}

TEST(hermite, large_order_stays_finite) {
    std::vector<double> h(2001);
    hermite_functions(35.0, h);
    for (double v : h) {
        ASSERT_TRUE(std::isfinite(v));
        ASSERT_LE(std::abs(v), 1.0);
    }
    EXPECT_NEAR(h[2000], oracle::hermite_function(2000, 35.0), 1e-10);
}

TEST(hermite, odd_orders_vanish_at_origin) {
    std::vector<double> h(31);
    hermite_functions(0.0, h);
    for (std::size_t n = 1; n < h.size(); n += 2) {
        EXPECT_EQ(h[n], 0.0);
    }
    EXPECT_NEAR(h[0], std::pow(std::numbers::pi, -0.25), 1e-16);
}

TEST(hermite, orthonormal) {
    for (int m : {0, 3, 8}) {
        for (int n : {0, 3, 8, 9}) {
            const double v =
                integrate([&](double x) { return hermite_function(m, x) * hermite_function(n, x); }, -12.0, 12.0,
                          1e-13, 8);
            EXPECT_NEAR(v, m == n ? 1.0 : 0.0, 1e-12) << m << "," << n;
        }
    }
    EXPECT_THROW(hermite_function(-1, 0.0), DomainError);
}

TEST(log_space, factorials) {
    EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
    EXPECT_NEAR(log_factorial(10), std::log(3628800.0), 1e-13);
    // (2m)!! = 2^m m!
    EXPECT_NEAR(log_double_factorial_even(3), std::log(48.0), 1e-13);
    EXPECT_NEAR(log_double_factorial_even(0), 0.0, 0.0);
}

TEST(log_space, poisson_tails_partition_unity) {
    for (double mean : {0.5, 3.0, 15.125}) {
        for (int n : {0, 2, 10, 30}) {
            const double total =
                poisson_lower_tail(n, mean) + std::exp(poisson_log_pmf(n, mean)) + poisson_upper_tail(n, mean);
            EXPECT_NEAR(total, 1.0, 1e-13) << mean << " " << n;
        }
    }
    EXPECT_EQ(poisson_upper_tail(0, 0.0), 0.0);
    EXPECT_EQ(poisson_log_pmf(0, 0.0), 0.0);
}

TEST(integrate, gaussian_normalization) {
    const double v =
        integrate([](double x) { return std::exp(-x * x) / std::sqrt(std::numbers::pi); }, -40.0, 40.0, 1e-14, 4);
    EXPECT_NEAR(v, 1.0, 1e-13);
}

TEST(integrate, oscillatory_against_closed_form) {
    const double v = integrate([](double x) { return std::cos(25.0 * x) * std::exp(-x); }, 0.0, 3.0, 1e-13, 4);
    const double expected = (std::exp(-3.0) * (25.0 * std::sin(75.0) - std::cos(75.0)) + 1.0) / 626.0;
    EXPECT_NEAR(v, expected, 1e-12);
}

TEST(integrate, deterministic) {
    auto f = [](double x) { return std::exp(-x * x) * std::sin(7 * x) * std::sin(7 * x); };
    EXPECT_EQ(integrate(f, -5.0, 5.0, 1e-12), integrate(f, -5.0, 5.0, 1e-12));
}

TEST(integrate, failures_are_reported) {
    EXPECT_THROW(integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10), DomainError);
    EXPECT_THROW(integrate([](double x) { return x; }, 1.0, 0.0, 1e-10), DomainError);
    EXPECT_THROW(integrate([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
    try {
        integrate([](double x) { return std::sin(1.0 / (x + 1e-9)); }, 0.0, 1.0, 1e-14, 1, 3);
        FAIL() << "expected QuadratureError";
    } catch (const QuadratureError &e) {
        EXPECT_TRUE(std::isfinite(e.estimate));
        EXPECT_GT(e.error_estimate, 0.0);
    }
    EXPECT_EQ(integrate([](double x) { return x; }, 2.0, 2.0, 1e-10), 0.0);
}

TEST(truncation, plan_follows_documented_rules) {
    for (double alpha : {0.0, 1.0, 1.8, 5.5}) {
        for (double r : {0.0, 1.5, 3.0}) {
            const TruncationPolicy t = truncation_plan(alpha, r, 0.0, 1e-14);
            EXPECT_GE(t.n_max, alpha * alpha + 10 * alpha + 20);
            EXPECT_NEAR(t.p_cut, std::exp(r) * std::sqrt(2 * std::log(1e14)), 1e-12);
            EXPECT_DOUBLE_EQ(t.grid_step, std::exp(-r) / 20);
            EXPECT_LE(poisson_upper_tail(t.m_max, alpha * alpha / 2), 1e-14);
            EXPECT_LE(poisson_lower_tail(t.m_min, alpha * alpha / 2), 1e-14);
            EXPECT_NO_THROW(t.validate());
        }
    }
}

TEST(truncation, rejects_bad_requests) {
    EXPECT_THROW(truncation_plan(1.0, 1.5, 0.0, 1e-3), DomainError);
    EXPECT_THROW(truncation_plan(1.0, 1.5, 0.0, 0.0), DomainError);
    EXPECT_THROW(truncation_plan(-1.0, 1.5, 0.0, 1e-14), DomainError);
    EXPECT_THROW(truncation_plan(70.0, 1.5, 0.0, 1e-14), TruncationError);
}

TEST(truncation, window_keeps_all_spike_mass) {
    // Spikes well outside the mean +/- one standard deviation still carry
    // percent-level weight at alpha = 1.8; the window must hold them.
    for (double alpha : {1.0, 1.8, 3.0}) {
        EncodingParams p;
        p.alpha = alpha;
        p.r = 1.5;
        p.beta = 0.4;
        const TruncationPolicy t = truncation_plan(p, 1e-14);
        EXPECT_NEAR(norm_squared(phi0(p, t)), 1.0, 1e-12) << alpha;
        EXPECT_NEAR(norm_squared(codeword(Codeword::one, p, t)), 1.0, 1e-12) << alpha;
    }
}

TEST(truncation, general_regime_window_is_centred_on_components) {
    EncodingParams p{1.0, 0.5, 0.4, 0.2, 0.3, 2.0};
    const TruncationPolicy t = truncation_plan(p, 1e-14);
    EXPECT_LT(t.x_lo, 0.0);
    EXPECT_GT(t.x_hi, 0.0);
    EXPECT_LE(t.grid_step, std::exp(-p.r) / 20);
}
