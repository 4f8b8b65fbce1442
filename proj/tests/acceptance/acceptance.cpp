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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "cli/config.h"
#include "ioncomb/comb_state.h"
#include "ioncomb/dynamics.h"
#include "ioncomb/error_analysis.h"
#include "ioncomb/physical_limits.h"

using namespace ioncomb;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double time_limit_s;  // <= 0: no limit
    std::function<Outcome()> check;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

EncodingParams comb(double alpha, double beta, double r) {
    EncodingParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.r = r;
    return p;
}

std::vector<double> alpha_grid() {
    std::vector<double> a;
    for (int i = 0; i <= 10; ++i) {
        a.push_back(0.5 + 0.5 * i);
    }
    return a;
}

double peak_of(const Wavefunction &wf) {
    double peak = 0.0;
    for (const auto &a : wf.amplitudes) {
        peak = std::max(peak, std::abs(a));
    }
    return peak;
}

// Random comb-regime parameters from a fixed seed.
std::vector<EncodingParams> random_comb_params(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> alpha(0.0, 3.0);
    std::uniform_real_distribution<double> beta(0.0, 2.0);
    std::uniform_real_distribution<double> r(0.5, 2.0);
    std::vector<EncodingParams> out;
    for (int i = 0; i < 5; ++i) {
        const double a = alpha(rng);
        const double b = beta(rng);
        out.push_back(comb(a, b, r(rng)));
    }
    return out;
}

Outcome success_probability() {
    const EncodingParams p = comb(1.0, 1.2, 1.5);
    const double v = homodyne_density(p, 0.0, truncation_plan(p));
    return {std::abs(v - 0.263) <= 0.005, fmt("P(X=0) = %.6f, want 0.263 +/- 0.005", v)};
}

Outcome worked_example_pp() {
    const EncodingParams p = comb(1.0, 1.2, 1.5);
    const double v = pp(Sign::plus, p, truncation_plan(p));
    return {v >= 0.07 && v <= 0.10, fmt("P_p = %.6f, want [0.07, 0.10]", v)};
}

Outcome physical_limits() {
    const LimitsReport l = limits(PhysicalParams::calcium_example());
    const bool ok = l.beta_max >= 1.15 && l.beta_max <= 1.25 && l.alpha_limit >= 0.90 && l.alpha_limit <= 1.10;
    return {ok, fmt("beta_max = %.6f in [1.15, 1.25], alpha_limit = %.6f in [0.90, 1.10]", l.beta_max, l.alpha_limit)};
}

Outcome r_insensitivity() {
    const auto a = alpha_grid();
    const SweepResult res = sweep(a.front(), a.back(), static_cast<int>(a.size()), {1.5, 3.0});
    double worst = 0.0;
    double at = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(res.rows[i].p_p - res.rows[a.size() + i].p_p);
        if (!(d <= worst)) {
            worst = d;
            at = a[i];
        }
    }
    return {worst < 1e-3, fmt("max |P_p(r=1.5) - P_p(r=3)| = %.3e at alpha = %.1f, want < 1e-3", worst, at)};
}

Outcome exponential_fit() {
    const auto a = alpha_grid();
    const SweepResult res = sweep(a.front(), a.back(), static_cast<int>(a.size()), {1.5});
    const ExponentialFit &f = res.fits.front();
    const bool ok = f.points >= 11 && f.r_squared > 0.99 && f.decay_rate > 0.0;
    return {ok, fmt("log-linear fit over %d points: R^2 = %.4f (want > 0.99), decay rate = %.4f; "
                    "direct fit of P_p: R^2 = %.4f, decay rate = %.4f",
                    f.points, f.r_squared, f.decay_rate, f.direct_r_squared, f.direct_decay_rate)};
}

Outcome hierarchy() {
    double worst = 0.0;
    std::string where;
    for (double r : {1.5, 2.0, 3.0}) {
        for (double alpha = 0.5; alpha <= 3.0 + 1e-12; alpha += 0.5) {
            const EncodingParams p = comb(alpha, 0.0, r);
            const TruncationPolicy t = truncation_plan(p);
            const double ratio = px_exact(p, t) / pp(Sign::plus, p, t);
            if (!(ratio <= worst)) {
                worst = ratio;
                where = fmt("alpha = %.1f, r = %.1f", alpha, r);
            }
        }
    }
    return {worst < 0.05, fmt("max P_x / P_p = %.3e at %s, want < 0.05", worst, where.c_str())};
}

Outcome series_vs_quadrature() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.8, 3.0}) {
        for (double r : {1.5, 2.0, 3.0}) {
            const EncodingParams p = comb(alpha, 0.0, r);
            const TruncationPolicy t = truncation_plan(p);
            for (Sign s : {Sign::plus, Sign::minus}) {
                worst = std::max(worst, std::abs(pp(s, p, t) - pp_direct(s, p, t)));
            }
        }
    }
    return {worst < 1e-4, fmt("max |series - quadrature| = %.3e over 9 points and both signs, want < 1e-4", worst)};
}

Outcome fourier_duality() {
    double worst = 0.0;
    for (const EncodingParams &p : random_comb_params(20261016)) {
        const TruncationPolicy t = truncation_plan(p);
        const Wavefunction ana = psi0(p, t);
        const Wavefunction num = fourier_transform(phi0(p, t), ana.start, ana.step, ana.size());
        const double peak = peak_of(ana);
        for (std::size_t j = 0; j < ana.size(); ++j) {
            const double mag = std::abs(ana.amplitudes[j]);
            if (mag > 1e-6 * peak) {
                worst = std::max(worst, std::abs(num.amplitudes[j] - ana.amplitudes[j]) / mag);
            }
        }
    }
    return {worst < 1e-6, fmt("max relative deviation = %.3e over 5 random parameter sets, want < 1e-6", worst)};
}

Outcome reduction_identity() {
    double worst = 0.0;
    double worst_sup = 0.0;
    for (const EncodingParams &p : random_comb_params(7)) {
        const TruncationPolicy t = truncation_plan(p);
        const Wavefunction cond = conditional_wavefunction(p, 0.0, t);
        const Wavefunction ref = phi0(p, t);
        if (!cond.same_grid(ref)) {
            return {false, "grids differ"};
        }
        const double peak = peak_of(ref);
        for (std::size_t i = 0; i < ref.size(); ++i) {
            const double mag = std::abs(ref.amplitudes[i]);
            const double diff = std::abs(cond.amplitudes[i] - ref.amplitudes[i]);
            worst_sup = std::max(worst_sup, diff / peak);
            // Far tails sit at the truncation tolerance; same cut as the Fourier check.
            if (mag > 1e-6 * peak) {
                worst = std::max(worst, diff / mag);
            }
        }
    }
    return {worst < 1e-8, fmt("max relative deviation = %.3e above 1e-6 of peak (max |diff| / peak = %.3e) "
                              "over 5 random parameter sets, want < 1e-8",
                              worst, worst_sup)};
}

Outcome interference_zeros() {
    double worst_plus = 0.0;
    double worst_minus = 0.0;
    int count = 0;
    for (const EncodingParams &p : {comb(1.0, 1.2, 1.5), comb(1.8, 0.0, 1.5), comb(3.0, 0.4, 2.0)}) {
        const TruncationPolicy t = truncation_plan(p);
        const CombState s(p, t);
        const double unit = std::numbers::pi / std::numbers::sqrt2;
        const int n_max = static_cast<int>(std::floor(t.p_cut / unit));
        for (int n = -n_max; n <= n_max; ++n) {
            if (std::abs(unit * (2 * n + 1)) <= t.p_cut) {
                worst_plus = std::max(worst_plus, std::norm(s.psi_pm(Sign::plus, unit * (2 * n + 1))));
                ++count;
            }
            if (std::abs(unit * 2 * n) <= t.p_cut) {
                worst_minus = std::max(worst_minus, std::norm(s.psi_pm(Sign::minus, unit * 2 * n)));
                ++count;
            }
        }
    }
    const bool ok = worst_plus < 1e-10 && worst_minus < 1e-10;
    return {ok, fmt("max |psi+|^2 = %.1e, max |psi-|^2 = %.1e at %d nodes, want < 1e-10", worst_plus, worst_minus,
                    count)};
}

Outcome bound_dominance() {
    double min_margin = INFINITY;
    for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
        for (double beta : {0.0, 1.2}) {
            for (double r : {1.5, 2.0, 3.0}) {
                const EncodingParams p = comb(alpha, beta, r);
                const double exact = px_exact(p, truncation_plan(p));
                const double bound = px_bound(p);
                min_margin = std::min(min_margin, bound - exact);
            }
        }
    }
    return {min_margin >= 0.0, fmt("min (bound - exact) = %.3e over 24 points, want >= 0", min_margin)};
}

// Position-space codeword from the CLI: peaks on the 2m - beta lattice in
// x / sqrt(2) with amplitudes proportional to nu_m.
Outcome comb_profile() {
    cli::RunConfig config;
    config.encoding = comb(1.8, 0.0, 1.5);
    const std::string csv = cli::cmd_wavefunction(config);
    std::vector<double> q;
    std::vector<double> amp;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#' || line[0] == 'c') {
            continue;
        }
        double c = 0.0;
        double re = 0.0;
        double im = 0.0;
        double a2 = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &c, &re, &im, &a2) == 4) {
            q.push_back(c);
            amp.push_back(std::sqrt(a2));
        }
    }
    const NuWeights nu = nu_weights(1.8);
    const double step = q.size() > 1 ? q[1] - q[0] : 1.0;
    double worst_pos = 0.0;
    double worst_height = 0.0;
    int peaks = 0;
    double ref_amp = 0.0;
    for (int m = 0; m <= nu.m_max; ++m) {
        if (nu[m] < 1e-3 * nu[0] && m > 0) {
            continue;
        }
        const double centre = 2.0 * m - config.encoding.beta;
        std::size_t best = q.size();
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (std::abs(q[i] - centre) < 0.5 && (best == q.size() || amp[i] > amp[best])) {
                best = i;
            }
        }
        if (best == q.size()) {
            return {false, fmt("no samples near the m = %d spike", m)};
        }
        worst_pos = std::max(worst_pos, std::abs(q[best] - centre));
        if (m == 0) {
            ref_amp = amp[best] / nu[0];
        }
        worst_height = std::max(worst_height, std::abs(amp[best] / (ref_amp * nu[m]) - 1.0));
        ++peaks;
    }
    const bool ok = worst_pos <= step && worst_height < 0.05;
    return {ok, fmt("%d peaks, max offset %.2e (grid step %.2e), max height deviation %.2e, want < 5%%", peaks,
                    worst_pos, step, worst_height)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "success-probability", 1.0, success_probability},
        {2, "worked-example-error", 10.0, worked_example_pp},
        {3, "physical-limits", 1e-3, physical_limits},
        {4, "r-insensitivity", 0.0, r_insensitivity},
        {5, "exponential-decay", 120.0, exponential_fit},
        {6, "error-hierarchy", 0.0, hierarchy},
        {7, "series-vs-quadrature", 0.0, series_vs_quadrature},
        {8, "fourier-duality", 0.0, fourier_duality},
        {9, "reduction-identity", 0.0, reduction_identity},
        {10, "interference-zeros", 0.0, interference_zeros},
        {11, "bound-dominance", 0.0, bound_dominance},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
            o.pass = false;
            o.detail += fmt("; runtime over the %.3g s limit", c.time_limit_s);
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] [%02d] %-22s %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }

    const auto t0 = std::chrono::steady_clock::now();
    Outcome profile;
    try {
        profile = comb_profile();
    } catch (const std::exception &e) {
        profile = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] [--] %-22s %s (%.3f s)\n", profile.pass ? "PASS" : "FAIL", "comb-profile",
                profile.detail.c_str(), secs);
    failures += profile.pass ? 0 : 1;

    std::printf("%d of %zu checks failed\n", failures, criteria.size() + 1);
    return failures == 0 ? 0 : 1;
}
