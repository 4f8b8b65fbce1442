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

#include "ioncomb/error_analysis.h"

#include <algorithm>
#include <atomic>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "ioncomb/errors.h"

namespace ioncomb {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Momentum error regions (pi/sqrt2)[2n + o, 2n + o + 1] with o = 1/2 for the
// + codeword and o = -1/2 for the - codeword, restricted to |p| <= p_cut.
template <typename F>
void for_each_p_region(Sign s, double p_cut, F &&fn) {
    const double unit = std::numbers::pi / kSqrt2;
    const double o = s == Sign::plus ? 0.5 : -0.5;
    const double u = p_cut / unit;
    const int n_lo = static_cast<int>(std::ceil((-u - o - 1.0) / 2.0));
    const int n_hi = static_cast<int>(std::floor((u - o) / 2.0));
    for (int n = n_lo; n <= n_hi; ++n) {
        fn(unit * (2.0 * n + o), unit * (2.0 * n + o + 1.0));
    }
}

// Position error regions sqrt2 [2n - 3/2 - beta, 2n - 1/2 - beta] meeting [lo, hi].
template <typename F>
void for_each_x_region(double beta, double lo, double hi, F &&fn) {
    const int n_lo = static_cast<int>(std::floor((lo / kSqrt2 + beta + 0.5) / 2.0));
    const int n_hi = static_cast<int>(std::ceil((hi / kSqrt2 + beta + 1.5) / 2.0));
    for (int n = n_lo; n <= n_hi; ++n) {
        const double a = kSqrt2 * (2.0 * n - 1.5 - beta);
        const double b = kSqrt2 * (2.0 * n - 0.5 - beta);
        if (b > lo && a < hi) {
            fn(a, b);
        }
    }
}

double clamp_probability(double p) {
    return std::clamp(p, 0.0, 1.0);
}

double sum_of_squares(const NuWeights &nu) {
    double s = 0.0;
    for (int m = nu.m_min; m <= nu.m_max; ++m) {
        s += nu[m] * nu[m];
    }
    return s;
}

}  // namespace

double px_exact(const EncodingParams &params, const TruncationPolicy &trunc) {
    const CombState state(params, trunc);
    const double width = std::exp(-params.r);
    double total = 0.0;
    for_each_x_region(params.beta, trunc.x_lo, trunc.x_hi, [&](double a, double b) {
        const auto density = [&](double x) {
            const double v = state.phi(x);
            return v * v;
        };
        const int panels = std::max(4, static_cast<int>(std::ceil((b - a) / width)));
        total += integrate(density, a, b, kRegionTolerance, panels);
    });
    return clamp_probability(total);
}

double px_bound(const EncodingParams &params, bool allow_outside_validity, double tolerance) {
    require_comb_regime(params, "px_bound");
    if (params.r < 1.5 && !allow_outside_validity) {
        throw ValidityError("px_bound: the asymptotic bound needs r >= 3/2");
    }
    const NuWeights nu = nu_weights(params.alpha, tolerance);
    const double density = zero_outcome_density(params.alpha, params.r, tolerance);
    double bracket = std::exp(-params.alpha * params.alpha);
    for (int m = 1; m <= nu.m_max + 1; ++m) {
        const double s = nu[m - 1] + nu[m];
        bracket += s * s;
    }
    const double r = params.r;
    return bracket / density / (std::numbers::pi * kSqrt2) * std::exp(-(r + 0.5 * std::exp(2.0 * r)));
}

double k_integral(int m, int m_prime, Sign s, double r, const TruncationPolicy &trunc) {
    if (m < 0 || m_prime < 0) {
        throw DomainError("k_integral: m and m' must be >= 0");
    }
    if (!std::isfinite(r) || r < 0.0) {
        throw DomainError("k_integral: r must be finite and >= 0");
    }
    const double d = static_cast<double>(std::abs(m - m_prime));
    const double envelope = std::exp(-2.0 * r);
    const double sign = s == Sign::plus ? 1.0 : -1.0;
    const auto integrand = [&](double p) {
        return std::exp(-envelope * p * p) * (1.0 + sign * std::cos(kSqrt2 * p)) * std::cos(2.0 * kSqrt2 * p * d);
    };
    const int panels = 4 + 2 * static_cast<int>(d);
    double total = 0.0;
    for_each_p_region(s, trunc.p_cut,
                      [&](double a, double b) { total += integrate(integrand, a, b, kRegionTolerance, panels); });
    return total;
}

double pp(Sign s, const EncodingParams &params, const TruncationPolicy &trunc) {
    const CombState state(params, trunc);
    const NuWeights &nu = state.nu();
    const int span = nu.m_max - nu.m_min;
    std::vector<double> k(static_cast<std::size_t>(span) + 1);
    for (int d = 0; d <= span; ++d) {
        k[static_cast<std::size_t>(d)] = k_integral(d, 0, s, params.r, trunc);
    }
    double series = k[0] * sum_of_squares(nu);
    for (int m = nu.m_min; m <= nu.m_max; ++m) {
        for (int mp = nu.m_min; mp < m; ++mp) {
            series += 2.0 * nu[m] * nu[mp] * k[static_cast<std::size_t>(m - mp)];
        }
    }
    const double n2 = state.normalization() * state.normalization();
    const double value = 2.0 / std::numbers::pi * n2 / state.pm_norm_squared(s) * std::exp(-params.r) * series;
    return clamp_probability(value);
}

double pp_direct(Sign s, const EncodingParams &params, const TruncationPolicy &trunc) {
    const CombState state(params, trunc);
    const auto density = [&](double p) { return std::norm(state.psi_pm(s, p)); };
    const int panels = 4 + 2 * (state.nu().m_max - state.nu().m_min);
    double total = 0.0;
    for_each_p_region(s, trunc.p_cut,
                      [&](double a, double b) { total += integrate(density, a, b, kRegionTolerance, panels); });
    return clamp_probability(total);
}

ErrorReport p_max(const EncodingParams &params, const TruncationPolicy &trunc) {
    ErrorReport rep;
    rep.p_x_exact = px_exact(params, trunc);
    rep.p_x_bound = params.r >= 1.5 ? px_bound(params, false, trunc.tolerance) : kNaN;
    rep.p_p_plus = pp(Sign::plus, params, trunc);
    rep.p_p_minus = pp(Sign::minus, params, trunc);
    rep.p_max = std::max({rep.p_x_exact, rep.p_p_plus, rep.p_p_minus});
    rep.success_probability = zero_outcome_density(params.alpha, params.r, trunc.tolerance);
    return rep;
}

ErrorReport grid_error_report(const Wavefunction &zero, const Wavefunction &one, double beta,
                              const TruncationPolicy &trunc) {
    if (zero.axis != Axis::position || !zero.same_grid(one)) {
        throw DomainError("grid_error_report: codewords must share one position grid");
    }
    Wavefunction z = zero;
    normalize(z);
    Wavefunction o = one;
    normalize(o);

    ErrorReport rep;
    rep.p_x_bound = kNaN;
    double px = 0.0;
    for_each_x_region(beta, z.start, z.end(), [&](double a, double b) { px += probability_in(z, a, b); });
    rep.p_x_exact = clamp_probability(px);

    // Half the policy step: the error-region integrals interpolate |psi|^2
    // linearly between samples.
    const double p_step = 0.5 * trunc.p_step;
    const std::size_t half = static_cast<std::size_t>(std::ceil(trunc.p_cut / p_step));
    const double p_start = -static_cast<double>(half) * p_step;
    for (Sign s : {Sign::plus, Sign::minus}) {
        const double sign = s == Sign::plus ? 1.0 : -1.0;
        Wavefunction combo = linear_combination(1.0, z, sign, o);
        normalize(combo);
        const Wavefunction mom = fourier_transform(combo, p_start, p_step, 2 * half + 1);
        double total = 0.0;
        for_each_p_region(s, trunc.p_cut, [&](double a, double b) { total += probability_in(mom, a, b); });
        (s == Sign::plus ? rep.p_p_plus : rep.p_p_minus) = clamp_probability(total);
    }
    rep.p_max = std::max({rep.p_x_exact, rep.p_p_plus, rep.p_p_minus});
    return rep;
}

ExponentialFit fit_exponential(const std::vector<double> &alpha, const std::vector<double> &p) {
    if (alpha.size() != p.size()) {
        throw DomainError("fit_exponential: alpha and p differ in length");
    }
    std::vector<double> xs;
    std::vector<double> ps;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] >= kFitAlphaMin && std::isfinite(p[i]) && p[i] > 0.0) {
            xs.push_back(alpha[i]);
            ps.push_back(p[i]);
        }
    }
    ExponentialFit fit;
    fit.points = static_cast<int>(xs.size());
    if (xs.size() < 2) {
        fit.amplitude = fit.decay_rate = fit.r_squared = kNaN;
        fit.direct_amplitude = fit.direct_decay_rate = fit.direct_r_squared = kNaN;
        return fit;
    }
    const double n = static_cast<double>(xs.size());

    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += std::log(ps[i]);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = std::log(ps[i]) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    fit.decay_rate = -slope;
    fit.amplitude = std::exp(intercept);
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = std::log(ps[i]) - (intercept + slope * xs[i]);
        ss_res += e * e;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;

    // For a fixed decay rate the best amplitude is linear; minimize the
    // remaining one-dimensional residual over the rate.
    const auto best_amplitude = [&](double rate) {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double e = std::exp(-rate * xs[i]);
            num += ps[i] * e;
            den += e * e;
        }
        return num / den;
    };
    const auto residual = [&](double rate) {
        const double a = best_amplitude(rate);
        double s = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double e = ps[i] - a * std::exp(-rate * xs[i]);
            s += e * e;
        }
        return s;
    };
    const double hi = std::max(4.0 * std::abs(fit.decay_rate), 10.0);
    const auto [rate, ss] = boost::math::tools::brent_find_minima(residual, -hi, hi, 52);
    double mean_p = 0.0;
    for (double v : ps) {
        mean_p += v;
    }
    mean_p /= n;
    double ss_tot = 0.0;
    for (double v : ps) {
        ss_tot += (v - mean_p) * (v - mean_p);
    }
    fit.direct_decay_rate = rate;
    fit.direct_amplitude = best_amplitude(rate);
    fit.direct_r_squared = ss_tot > 0.0 ? 1.0 - ss / ss_tot : 1.0;
    return fit;
}

SweepResult sweep(double alpha_lo, double alpha_hi, int n_points, const std::vector<double> &r_list,
                  double tolerance, int threads) {
    if (n_points < 1) {
        throw DomainError("sweep: n_points must be >= 1");
    }
    const bool ordered = n_points == 1 ? alpha_lo <= alpha_hi : alpha_lo < alpha_hi;
    if (!std::isfinite(alpha_lo) || !std::isfinite(alpha_hi) || alpha_lo < 0.0 || !ordered) {
        throw DomainError("sweep: need 0 <= alpha_lo < alpha_hi (alpha_lo <= alpha_hi for a single point)");
    }
    if (r_list.empty()) {
        throw DomainError("sweep: r_list is empty");
    }
    for (double r : r_list) {
        if (!std::isfinite(r) || r < 0.0) {
            throw DomainError("sweep: every r must be finite and >= 0");
        }
    }
    if (threads < 1) {
        throw DomainError("sweep: threads must be >= 1");
    }

    SweepResult result;
    const std::size_t per_r = static_cast<std::size_t>(n_points);
    result.rows.resize(per_r * r_list.size());
    for (std::size_t ri = 0; ri < r_list.size(); ++ri) {
        for (std::size_t i = 0; i < per_r; ++i) {
            SweepRow &row = result.rows[ri * per_r + i];
            if (n_points == 1) {
                row.alpha = alpha_lo;
            } else {
                row.alpha = i + 1 == per_r ? alpha_hi
                                           : alpha_lo + (alpha_hi - alpha_lo) * static_cast<double>(i) / (n_points - 1);
            }
            row.r = r_list[ri];
        }
    }

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t idx = next++; idx < result.rows.size(); idx = next++) {
            SweepRow &row = result.rows[idx];
            try {
                EncodingParams params;
                params.alpha = row.alpha;
                params.r = row.r;
                row.p_p = pp(Sign::plus, params, truncation_plan(params, tolerance));
            } catch (const std::exception &e) {
                row.p_p = kNaN;
                row.error = e.what();
            }
        }
    };
    const int n_workers = std::min<int>(threads, static_cast<int>(result.rows.size()));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int t = 0; t < n_workers; ++t) {
            pool.emplace_back(worker);
        }
    }

    for (std::size_t ri = 0; ri < r_list.size(); ++ri) {
        std::vector<double> xs(per_r);
        std::vector<double> ps(per_r);
        for (std::size_t i = 0; i < per_r; ++i) {
            xs[i] = result.rows[ri * per_r + i].alpha;
            ps[i] = result.rows[ri * per_r + i].p_p;
        }
        ExponentialFit fit = fit_exponential(xs, ps);
        fit.r = r_list[ri];
        for (std::size_t i = 0; i < per_r; ++i) {
            SweepRow &row = result.rows[ri * per_r + i];
            const bool fitted = row.alpha >= kFitAlphaMin && std::isfinite(row.p_p) && row.p_p > 0.0 &&
                                std::isfinite(fit.decay_rate);
            row.fit_residual =
                fitted ? std::log(row.p_p) - (std::log(fit.amplitude) - fit.decay_rate * row.alpha) : kNaN;
        }
        result.fits.push_back(fit);
    }
    return result;
}

}  // namespace ioncomb
