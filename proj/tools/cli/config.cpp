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

#include "cli/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "ioncomb/errors.h"

namespace ioncomb::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(const std::string &key, const std::string &text) {
    const std::string_view t = trim(text);
    if (t == "pi") {
        return std::numbers::pi;
    }
    double v = 0.0;
    const char *end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw UsageError(key + ": expected a finite number, got '" + text + "'");
    }
    return v;
}

int parse_int(const std::string &key, const std::string &text) {
    const std::string_view t = trim(text);
    int v = 0;
    const char *end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (t.empty() || ec != std::errc() || ptr != end) {
        throw UsageError(key + ": expected an integer, got '" + text + "'");
    }
    return v;
}

std::vector<double> parse_real_list(const std::string &key, const std::string &text) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        out.push_back(parse_real(key, item));
    }
    if (out.empty()) {
        throw UsageError(key + ": expected a comma-separated list of numbers");
    }
    return out;
}

std::string join(const std::vector<double> &xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += format_double(xs[i]);
    }
    return s;
}

const char *format_name(Format f) {
    return f == Format::csv ? "csv" : "json";
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

KeyValues parse_config_text(std::string_view text, std::string_view origin) {
    KeyValues out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError(std::string(origin) + ":" + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw UsageError(std::string(origin) + ":" + std::to_string(line_no) + ": empty key");
        }
        out[key] = value;
    }
    return out;
}

KeyValues load_config_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

KeyValues parse_overrides(const std::vector<std::string> &tokens) {
    KeyValues out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string &tok = tokens[i];
        if (tok.rfind("--", 0) != 0 || tok.size() <= 2) {
            throw UsageError("unexpected argument '" + tok + "'");
        }
        std::string body = tok.substr(2);
        const auto eq = body.find('=');
        if (eq != std::string::npos) {
            out[body.substr(0, eq)] = body.substr(eq + 1);
        } else if (i + 1 < tokens.size()) {
            out[body] = tokens[++i];
        } else {
            throw UsageError("option '" + tok + "' needs a value");
        }
    }
    return out;
}

const std::vector<std::string> &known_keys() {
    static const std::vector<std::string> keys = {
        "encoding.alpha",    "encoding.beta",       "encoding.r",        "encoding.phi",
        "encoding.k",        "encoding.tau",        "physical.mass",     "physical.omega_a",
        "physical.g0",       "physical.lambda_c",   "physical.beta_tolerance",
        "truncation.tolerance", "output.path",      "output.format",     "run.threads",
        "wavefunction.label", "wavefunction.axis",  "sweep.alpha_lo",    "sweep.alpha_hi",
        "sweep.n_points",    "sweep.r_list",        "window.x_lo",       "window.x_hi",
        "window.error_samples",
    };
    return keys;
}

int parse_threads(const std::string &text, const std::string &key) {
    if (trim(text) == "auto") {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    const int n = parse_int(key, text);
    if (n < 1) {
        throw UsageError(key + ": thread count must be >= 1 or 'auto'");
    }
    return n;
}

RunConfig resolve(const KeyValues &values, const std::string &threads_default) {
    const auto &keys = known_keys();
    for (const auto &[key, value] : values) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw UsageError("unknown configuration key '" + key + "'");
        }
    }
    const auto get = [&](const char *key) -> const std::string * {
        const auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    };
    const auto real = [&](const char *key, double &dst) {
        if (const std::string *v = get(key)) {
            dst = parse_real(key, *v);
        }
    };

    RunConfig c;
    real("encoding.alpha", c.encoding.alpha);
    real("encoding.beta", c.encoding.beta);
    real("encoding.r", c.encoding.r);
    real("encoding.phi", c.encoding.phi);
    real("encoding.k", c.encoding.k);
    real("encoding.tau", c.encoding.tau);
    try {
        require_valid(c.encoding);
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }

    static const char *phys_keys[] = {"physical.mass", "physical.omega_a", "physical.g0", "physical.lambda_c"};
    const bool any_phys = std::any_of(std::begin(phys_keys), std::end(phys_keys), [&](const char *k) { return get(k); });
    if (any_phys) {
        PhysicalParams p;
        double *fields[] = {&p.mass, &p.omega_a, &p.g0, &p.lambda_c};
        for (int i = 0; i < 4; ++i) {
            if (!get(phys_keys[i])) {
                throw UsageError(std::string("missing ") + phys_keys[i] + " (physical parameters are all-or-nothing)");
            }
            real(phys_keys[i], *fields[i]);
        }
        try {
            p.validate();
        } catch (const DomainError &e) {
            throw UsageError(e.what());
        }
        c.physical = p;
    }
    real("physical.beta_tolerance", c.beta_tolerance);
    if (!(c.beta_tolerance >= 0.0)) {
        throw UsageError("physical.beta_tolerance must be >= 0");
    }

    real("truncation.tolerance", c.tolerance);
    if (!(c.tolerance > 0.0 && c.tolerance <= 1e-4)) {
        throw UsageError("truncation.tolerance must lie in (0, 1e-4]");
    }

    if (const std::string *v = get("output.path")) {
        c.out = *v;
    }
    if (const std::string *v = get("output.format")) {
        if (*v == "csv") {
            c.format = Format::csv;
        } else if (*v == "json") {
            c.format = Format::json;
        } else {
            throw UsageError("output.format: expected csv or json, got '" + *v + "'");
        }
    }
    const std::string *threads = get("run.threads");
    c.threads_text = threads ? *threads : threads_default;
    c.threads = parse_threads(c.threads_text, threads ? "run.threads" : kThreadsEnv);

    if (const std::string *v = get("wavefunction.label")) {
        try {
            c.label = parse_codeword(*v);
        } catch (const DomainError &e) {
            throw UsageError(std::string("wavefunction.label: ") + e.what());
        }
    }
    if (const std::string *v = get("wavefunction.axis")) {
        if (*v == "x" || *v == "position") {
            c.axis = 'x';
        } else if (*v == "p" || *v == "momentum") {
            c.axis = 'p';
        } else {
            throw UsageError("wavefunction.axis: expected x or p, got '" + *v + "'");
        }
    }

    real("sweep.alpha_lo", c.alpha_lo);
    real("sweep.alpha_hi", c.alpha_hi);
    if (const std::string *v = get("sweep.n_points")) {
        c.n_points = parse_int("sweep.n_points", *v);
    }
    if (const std::string *v = get("sweep.r_list")) {
        c.r_list = parse_real_list("sweep.r_list", *v);
    }

    real("window.x_lo", c.x_lo);
    real("window.x_hi", c.x_hi);
    if (const std::string *v = get("window.error_samples")) {
        c.error_samples = parse_int("window.error_samples", *v);
    }
    return c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
    std::vector<std::pair<std::string, std::string>> e = {
        {"encoding.alpha", format_double(encoding.alpha)},
        {"encoding.beta", format_double(encoding.beta)},
        {"encoding.r", format_double(encoding.r)},
        {"encoding.phi", format_double(encoding.phi)},
        {"encoding.k", format_double(encoding.k)},
        {"encoding.tau", format_double(encoding.tau)},
    };
    if (physical) {
        e.emplace_back("physical.mass", format_double(physical->mass));
        e.emplace_back("physical.omega_a", format_double(physical->omega_a));
        e.emplace_back("physical.g0", format_double(physical->g0));
        e.emplace_back("physical.lambda_c", format_double(physical->lambda_c));
    }
    e.emplace_back("physical.beta_tolerance", format_double(beta_tolerance));
    e.emplace_back("truncation.tolerance", format_double(tolerance));
    e.emplace_back("output.path", out.empty() ? "-" : out);
    if (format) {
        e.emplace_back("output.format", format_name(*format));
    }
    e.emplace_back("run.threads", std::to_string(threads));
    e.emplace_back("wavefunction.label", codeword_symbol(label));
    e.emplace_back("wavefunction.axis", std::string(1, axis));
    e.emplace_back("sweep.alpha_lo", format_double(alpha_lo));
    e.emplace_back("sweep.alpha_hi", format_double(alpha_hi));
    e.emplace_back("sweep.n_points", std::to_string(n_points));
    e.emplace_back("sweep.r_list", join(r_list));
    e.emplace_back("window.x_lo", format_double(x_lo));
    e.emplace_back("window.x_hi", format_double(x_hi));
    e.emplace_back("window.error_samples", std::to_string(error_samples));
    return e;
}

}  // namespace ioncomb::cli
