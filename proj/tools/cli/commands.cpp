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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "CLI11.hpp"
#include "cli/output.h"
#include "ioncomb/comb_state.h"
#include "ioncomb/dynamics.h"
#include "ioncomb/error_analysis.h"
#include "ioncomb/errors.h"
#include "ioncomb/physical_limits.h"

namespace ioncomb::cli {

namespace {

void require_comb(const RunConfig &config, const char *command) {
    try {
        require_comb_regime(config.encoding, command);
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }
}

Format format_or(const RunConfig &config, Format fallback) {
    return config.format.value_or(fallback);
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c == '\n' ? ' ' : c;
    }
    return q + "\"";
}

// Two-column `quantity,value` table for the scalar reports.
std::string quantity_table(const std::string &command, const RunConfig &config,
                           const std::vector<std::pair<std::string, std::string>> &rows) {
    std::string s = csv_preamble(command, config);
    s += "quantity,value\n";
    for (const auto &[k, v] : rows) {
        s += csv_line({k, csv_quote(v)});
    }
    return s;
}

Json report_json(const ErrorReport &r) {
    Json j = Json::object();
    j["p_x_exact"] = number(r.p_x_exact);
    j["p_x_bound"] = number(r.p_x_bound);
    j["p_p_plus"] = number(r.p_p_plus);
    j["p_p_minus"] = number(r.p_p_minus);
    j["p_max"] = number(r.p_max);
    j["success_probability"] = number(r.success_probability);
    return j;
}

Json limits_json(const LimitsReport &l) {
    Json j = Json::object();
    j["xi"] = number(l.xi);
    j["beta_max"] = number(l.beta_max);
    j["alpha_max_LD"] = number(l.alpha_max_LD);
    j["alpha_max_detuning"] = number(l.alpha_max_detuning);
    j["alpha_limit"] = number(l.alpha_limit);
    j["delta"] = number(l.delta);
    j["g"] = number(l.g);
    return j;
}

Json violations_json(const std::vector<RegimeViolation> &vs) {
    Json arr = Json::array();
    for (const auto &v : vs) {
        Json j = Json::object();
        j["quantity"] = v.quantity;
        j["bound"] = v.bound;
        j["value"] = number(v.value);
        j["limit"] = number(v.limit);
        j["reference"] = v.reference;
        arr.push_back(j);
    }
    return arr;
}

Json fit_json(const ExponentialFit &f) {
    Json j = Json::object();
    j["r"] = number(f.r);
    j["amplitude"] = number(f.amplitude);
    j["decay_rate"] = number(f.decay_rate);
    j["r_squared"] = number(f.r_squared);
    j["direct_amplitude"] = number(f.direct_amplitude);
    j["direct_decay_rate"] = number(f.direct_decay_rate);
    j["direct_r_squared"] = number(f.direct_r_squared);
    j["points"] = f.points;
    j["alpha_min"] = kFitAlphaMin;
    return j;
}

Json envelope(const char *command, const RunConfig &config) {
    Json j = Json::object();
    j["command"] = command;
    j["config"] = config_json(config);
    return j;
}

}  // namespace

std::string fit_sidecar_path(const std::string &out) {
    return out + ".fit.json";
}

std::string cmd_wavefunction(const RunConfig &config) {
    require_comb(config, "wavefunction");
    const EncodingParams &params = config.encoding;
    const TruncationPolicy trunc = truncation_plan(params, config.tolerance);
    const Axis axis = config.axis == 'x' ? Axis::position : Axis::momentum;
    const Wavefunction wf = codeword(config.label, params, trunc, axis);
    // Plotted variables: x / sqrt(2) and sqrt(2) p.
    const double scale = axis == Axis::position ? 1.0 / std::numbers::sqrt2 : std::numbers::sqrt2;

    if (format_or(config, Format::csv) == Format::csv) {
        std::string s = csv_preamble("wavefunction", config);
        s += "coordinate,re,im,abs2\n";
        for (std::size_t i = 0; i < wf.size(); ++i) {
            const Complex a = wf.amplitudes[i];
            s += csv_line({format_double(scale * wf.coordinate(i)), format_double(a.real()), format_double(a.imag()),
                           format_double(std::norm(a))});
        }
        return s;
    }
    Json j = envelope("wavefunction", config);
    j["label"] = codeword_symbol(config.label);
    j["axis"] = axis == Axis::position ? "x" : "p";
    j["coordinate"] = axis == Axis::position ? "x/sqrt(2)" : "sqrt(2)*p";
    Json coord = Json::array();
    Json re = Json::array();
    Json im = Json::array();
    Json abs2 = Json::array();
    for (std::size_t i = 0; i < wf.size(); ++i) {
        const Complex a = wf.amplitudes[i];
        coord.push_back(scale * wf.coordinate(i));
        re.push_back(a.real());
        im.push_back(a.imag());
        abs2.push_back(std::norm(a));
    }
    j["coordinate_values"] = coord;
    j["re"] = re;
    j["im"] = im;
    j["abs2"] = abs2;
    return dump(j);
}

std::string cmd_error_report(const RunConfig &config) {
    require_comb(config, "error-report");
    const TruncationPolicy trunc = truncation_plan(config.encoding, config.tolerance);
    const ErrorReport rep = p_max(config.encoding, trunc);
    std::vector<RegimeViolation> violations;
    if (config.physical) {
        violations = validate_regime(config.encoding, *config.physical, config.beta_tolerance);
    }
    if (format_or(config, Format::json) == Format::csv) {
        std::vector<std::pair<std::string, std::string>> rows = {
            {"p_x_exact", format_double(rep.p_x_exact)},
            {"p_x_bound", format_double(rep.p_x_bound)},
            {"p_p_plus", format_double(rep.p_p_plus)},
            {"p_p_minus", format_double(rep.p_p_minus)},
            {"p_max", format_double(rep.p_max)},
            {"success_probability", format_double(rep.success_probability)},
        };
        for (const auto &v : violations) {
            rows.emplace_back("violation." + v.quantity, v.bound);
        }
        return quantity_table("error-report", config, rows);
    }
    Json j = envelope("error-report", config);
    j["report"] = report_json(rep);
    if (config.physical) {
        j["violations"] = violations_json(violations);
    }
    return dump(j);
}

std::string cmd_sweep(const RunConfig &config) {
    if (config.n_points < 1) {
        throw UsageError("sweep.n_points must be >= 1");
    }
    const bool ordered = config.n_points == 1 ? config.alpha_lo <= config.alpha_hi : config.alpha_lo < config.alpha_hi;
    if (config.alpha_lo < 0.0 || !ordered) {
        throw UsageError("sweep: need 0 <= sweep.alpha_lo < sweep.alpha_hi");
    }
    for (double r : config.r_list) {
        if (r < 0.0) {
            throw UsageError("sweep.r_list: every r must be >= 0");
        }
    }
    const SweepResult res =
        sweep(config.alpha_lo, config.alpha_hi, config.n_points, config.r_list, config.tolerance, config.threads);

    Json fits = Json::array();
    for (const auto &f : res.fits) {
        fits.push_back(fit_json(f));
    }

    if (format_or(config, Format::csv) == Format::json) {
        Json j = envelope("sweep", config);
        Json rows = Json::array();
        for (const auto &row : res.rows) {
            Json r = Json::object();
            r["alpha"] = number(row.alpha);
            r["r"] = number(row.r);
            r["p_p"] = number(row.p_p);
            r["fit_residual"] = number(row.fit_residual);
            r["error"] = row.error;
            rows.push_back(r);
        }
        j["rows"] = rows;
        j["fits"] = fits;
        return dump(j);
    }

    std::string s = csv_preamble("sweep", config);
    s += "alpha,r,p_p,error\n";
    for (const auto &row : res.rows) {
        s += csv_line({format_double(row.alpha), format_double(row.r), format_double(row.p_p), csv_quote(row.error)});
    }
    for (const auto &f : res.fits) {
        s += "# fit r = " + format_double(f.r) + ": p_p = A exp(-lambda alpha) over alpha >= " +
             format_double(kFitAlphaMin) + ", A = " + format_double(f.amplitude) +
             ", lambda = " + format_double(f.decay_rate) + ", r_squared = " + format_double(f.r_squared) + "\n";
    }
    if (!config.out.empty() && config.out != "-") {
        Json side = envelope("sweep", config);
        side["fits"] = fits;
        emit(fit_sidecar_path(config.out), dump(side), std::cout);
    }
    return s;
}

std::string cmd_limits(const RunConfig &config) {
    if (!config.physical) {
        throw UsageError("limits needs physical.mass, physical.omega_a, physical.g0 and physical.lambda_c");
    }
    const LimitsReport l = limits(*config.physical);
    const Coupling c = coupling(*config.physical);
    const auto violations = validate_regime(config.encoding, *config.physical, config.beta_tolerance);
    if (format_or(config, Format::json) == Format::csv) {
        std::vector<std::pair<std::string, std::string>> rows = {
            {"xi", format_double(l.xi)},
            {"beta_max", format_double(l.beta_max)},
            {"alpha_max_LD", format_double(l.alpha_max_LD)},
            {"alpha_max_detuning", format_double(l.alpha_max_detuning)},
            {"alpha_limit", format_double(l.alpha_limit)},
            {"delta", format_double(l.delta)},
            {"g", format_double(l.g)},
            {"k", format_double(c.k)},
        };
        for (const auto &v : violations) {
            rows.emplace_back("violation." + v.quantity, v.bound);
        }
        return quantity_table("limits", config, rows);
    }
    Json j = envelope("limits", config);
    j["limits"] = limits_json(l);
    Json cj = Json::object();
    cj["delta"] = number(c.delta);
    cj["g"] = number(c.g);
    cj["k"] = number(c.k);
    j["coupling"] = cj;
    j["violations"] = violations_json(violations);
    return dump(j);
}

std::string cmd_window(const RunConfig &config) {
    if (!(config.x_lo < config.x_hi)) {
        throw UsageError("window: need window.x_lo < window.x_hi");
    }
    if (config.error_samples < 3 || config.error_samples % 2 == 0) {
        throw UsageError("window.error_samples must be odd and >= 3");
    }
    const TruncationPolicy trunc = truncation_plan(config.encoding, config.tolerance);
    const WindowAcceptance w = window_acceptance(config.encoding, config.x_lo, config.x_hi, trunc, config.error_samples);
    if (format_or(config, Format::json) == Format::csv) {
        return quantity_table("window", config,
                              {{"x_lo", format_double(config.x_lo)},
                               {"x_hi", format_double(config.x_hi)},
                               {"acceptance_probability", format_double(w.probability)},
                               {"mean_error_bound", format_double(w.mean_error_bound)}});
    }
    Json j = envelope("window", config);
    j["x_lo"] = config.x_lo;
    j["x_hi"] = config.x_hi;
    j["acceptance_probability"] = number(w.probability);
    j["mean_error_bound"] = number(w.mean_error_bound);
    return dump(j);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const char *threads_env) {
    CLI::App app{"Comb-state codewords of a trapped ion: wavefunctions, error probabilities and limits.",
                 "ioncomb"};
    app.require_subcommand(1);
    app.allow_extras();
    app.fallthrough();
    app.footer(
        "Any configuration key may be overridden as --key=value, e.g. --encoding.alpha=1.8.\n"
        "The default thread count comes from " +
        std::string(kThreadsEnv) + " (N or auto).");

    std::string config_path;
    std::string out_path;
    std::string format;
    std::string threads;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker threads: N or auto");

    KeyValues named;
    const auto named_option = [&](CLI::App *sub, const char *flag, const char *key, const char *help) {
        sub->add_option_function<std::string>(flag, [&named, key](const std::string &v) { named[key] = v; }, help);
    };

    CLI::App *wf = app.add_subcommand("wavefunction", "sample a codeword on the position or momentum grid");
    named_option(wf, "--label", "wavefunction.label", "0, 1, + or -");
    named_option(wf, "--axis", "wavefunction.axis", "x or p");
    CLI::App *er = app.add_subcommand("error-report", "intrinsic error probabilities and success density");
    CLI::App *sw = app.add_subcommand("sweep", "P_p over an alpha grid with an exponential fit");
    named_option(sw, "--alpha-lo", "sweep.alpha_lo", "first alpha");
    named_option(sw, "--alpha-hi", "sweep.alpha_hi", "last alpha");
    named_option(sw, "--points", "sweep.n_points", "number of alpha values");
    named_option(sw, "--r-list", "sweep.r_list", "comma-separated squeezing values");
    CLI::App *li = app.add_subcommand("limits", "Lamb-Dicke and detuning limits from SI parameters");
    CLI::App *wi = app.add_subcommand("window", "acceptance probability of a homodyne window");
    named_option(wi, "--x-lo", "window.x_lo", "lower end of the accepted outcomes");
    named_option(wi, "--x-hi", "window.x_hi", "upper end of the accepted outcomes");
    for (CLI::App *sub : {wf, er, sw, li, wi}) {
        sub->allow_extras();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::string command;
    std::vector<std::string> extras = app.remaining();
    for (CLI::App *sub : app.get_subcommands()) {
        command = sub->get_name();
        const auto more = sub->remaining();
        extras.insert(extras.end(), more.begin(), more.end());
    }

    RunConfig config;
    try {
        KeyValues values;
        if (!config_path.empty()) {
            values = load_config_file(config_path);
        }
        for (const auto &[k, v] : parse_overrides(extras)) {
            values[k] = v;
        }
        for (const auto &[k, v] : named) {
            values[k] = v;
        }
        if (!out_path.empty()) {
            values["output.path"] = out_path;
        }
        if (!format.empty()) {
            values["output.format"] = format;
        }
        if (!threads.empty()) {
            values["run.threads"] = threads;
        }
        const std::string threads_default = threads_env && *threads_env ? threads_env : "1";
        config = resolve(values, threads_default);

        std::string text;
        if (command == "wavefunction") {
            text = cmd_wavefunction(config);
        } else if (command == "error-report") {
            text = cmd_error_report(config);
        } else if (command == "sweep") {
            text = cmd_sweep(config);
        } else if (command == "limits") {
            text = cmd_limits(config);
        } else {
            text = cmd_window(config);
        }
        emit(config.out, text, out);
    } catch (const UsageError &e) {
        err << "ioncomb " << command << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "ioncomb " << command << ": computation failed: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitOk;
}

}  // namespace ioncomb::cli
