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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.h"
#include "cli/config.h"
#include "json.hpp"

using namespace ioncomb;
using namespace ioncomb::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args, const char *env = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("ioncomb_test_" + name);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::vector<std::string> kCalcium = {"--physical.mass=6.64e-26", "--physical.omega_a=4e5",
                                           "--physical.g0=3.8e6", "--physical.lambda_c=866e-9"};

}  // namespace

TEST(config, parses_key_values_and_comments) {
    const KeyValues kv = parse_config_text("# header\nencoding.alpha = 1.5\n\n  encoding.r=2 # trailing\n");
    ASSERT_EQ(kv.size(), 2u);
    EXPECT_EQ(kv.at("encoding.alpha"), "1.5");
    EXPECT_EQ(kv.at("encoding.r"), "2");
    EXPECT_THROW(parse_config_text("no equals sign"), UsageError);
}

TEST(config, resolves_typed_values) {
    const RunConfig c = resolve({{"encoding.alpha", "1.8"},
                                 {"encoding.tau", "pi"},
                                 {"sweep.r_list", "1.5,3"},
                                 {"wavefunction.label", "+"},
                                 {"output.format", "json"}});
    EXPECT_EQ(c.encoding.alpha, 1.8);
    EXPECT_EQ(c.encoding.tau, std::numbers::pi);
    EXPECT_EQ(c.r_list, (std::vector<double>{1.5, 3.0}));
    EXPECT_EQ(c.label, Codeword::plus);
    EXPECT_EQ(c.format, Format::json);
}

TEST(config, rejects_bad_input) {
    EXPECT_THROW(resolve({{"encoding.alpah", "1"}}), UsageError);
    EXPECT_THROW(resolve({{"encoding.alpha", "one"}}), UsageError);
    EXPECT_THROW(resolve({{"physical.mass", "1e-26"}}), UsageError);
    EXPECT_THROW(resolve({{"output.format", "xml"}}), UsageError);
    EXPECT_THROW(parse_threads("0"), UsageError);
    EXPECT_GE(parse_threads("auto"), 1);
    EXPECT_EQ(parse_threads("3"), 3);
}

TEST(config, formats_seventeen_digits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(cli, reads_config_file_with_override_precedence) {
    const auto path = temp_path("config.txt");
    std::ofstream(path) << "encoding.alpha = 0.5\nencoding.r = 1.5\n";
    const Result r = invoke({"error-report", "--config", path.string(), "--encoding.alpha=1.0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["config"]["encoding.alpha"], "1");
    std::filesystem::remove(path);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(invoke({"sweep", "--sweep.n_points=0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"limits"}).code, kExitUsage);
    EXPECT_EQ(invoke({"window", "--x-lo", "0.5", "--x-hi", "0.5"}).code, kExitUsage);
    EXPECT_EQ(invoke({"wavefunction", "--encoding.k=0.3"}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"error-report", "--no.such.key=1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"error-report", "--config", "/nonexistent/ioncomb.cfg"}).code, kExitUsage);
    const Result big = invoke({"error-report", "--encoding.alpha=70", "--encoding.r=1.5"});
    EXPECT_EQ(big.code, kExitCompute);
    EXPECT_NE(big.err.find("computation failed"), std::string::npos);
}

TEST(cli, wavefunction_csv_layout) {
    const Result r = invoke({"wavefunction", "--encoding.alpha=1", "--encoding.beta=0", "--encoding.r=1.5",
                             "--label", "-", "--axis", "p"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
    const auto ls = lines(r.out);
    std::size_t i = 0;
    while (i < ls.size() && ls[i].starts_with("#")) {
        ++i;
    }
    ASSERT_GT(i, 1u);
    EXPECT_NE(r.out.find("# encoding.alpha = 1\n"), std::string::npos);
    ASSERT_LT(i, ls.size());
    EXPECT_EQ(ls[i], "coordinate,re,im,abs2");
    bool saw_zero = false;
    for (std::size_t k = i + 1; k < ls.size(); ++k) {
        std::istringstream row(ls[k]);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) {
            cells.push_back(cell);
        }
        ASSERT_EQ(cells.size(), 4u);
        if (std::stod(cells[0]) == 0.0) {
            saw_zero = true;
            // |-> has a node at p = 0.
            EXPECT_LT(std::stod(cells[3]), 1e-10);
        }
    }
    EXPECT_TRUE(saw_zero);
}

TEST(cli, sweep_is_thread_independent) {
    const std::vector<std::string> base = {"sweep", "--alpha-lo", "0.5", "--alpha-hi", "2.5", "--points", "5"};
    auto with = [&](const std::string &t) {
        auto args = base;
        args.push_back("--threads");
        args.push_back(t);
        return invoke(args);
    };
    const Result one = with("1");
    const Result four = with("4");
    ASSERT_EQ(one.code, 0) << one.err;
    ASSERT_EQ(four.code, 0) << four.err;
    // Only the resolved thread count in the header differs.
    auto strip = [](const std::string &s) {
        std::string out;
        for (const auto &l : lines(s)) {
            if (!l.starts_with("# run.threads")) {
                out += l + "\n";
            }
        }
        return out;
    };
    EXPECT_EQ(strip(one.out), strip(four.out));
    EXPECT_NE(one.out.find("# fit r = 1.5"), std::string::npos);
}

TEST(cli, threads_from_environment) {
    const Result r = invoke({"sweep", "--points", "1", "--alpha-lo", "1", "--alpha-hi", "1", "--format", "json"}, "2");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["config"]["run.threads"], "2");
    const Result flag = invoke({"sweep", "--points", "1", "--alpha-lo", "1", "--alpha-hi", "1", "--format", "json",
                                "--threads", "1"},
                               "2");
    EXPECT_EQ(nlohmann::json::parse(flag.out)["config"]["run.threads"], "1");
    EXPECT_EQ(invoke({"limits"}, "zero").code, kExitUsage);
}

TEST(cli, sweep_writes_fit_sidecar) {
    const auto path = temp_path("sweep.csv");
    const Result r = invoke({"sweep", "--alpha-lo", "0.5", "--alpha-hi", "1.5", "--points", "3", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const std::string csv = slurp(path);
    EXPECT_NE(csv.find("alpha,r,p_p,error\n"), std::string::npos);
    const auto side = nlohmann::json::parse(slurp(fit_sidecar_path(path.string())));
    ASSERT_EQ(side["fits"].size(), 1u);
    EXPECT_EQ(side["fits"][0]["points"], 3);
    EXPECT_TRUE(side.contains("config"));
    std::filesystem::remove(path);
    std::filesystem::remove(fit_sidecar_path(path.string()));
}

TEST(cli, limits_report_and_violations) {
    auto args = kCalcium;
    args.insert(args.begin(), "limits");
    args.push_back("--encoding.alpha=1");
    args.push_back("--encoding.beta=1.2");
    args.push_back("--encoding.r=1.5");
    const Result r = invoke(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["limits"]["beta_max"].get<double>(), 1.2148, 1e-3);
    EXPECT_EQ(j["coupling"]["k"], 0.5);
    ASSERT_EQ(j["violations"].size(), 1u);
    EXPECT_EQ(j["violations"][0]["quantity"], "alpha");
    EXPECT_EQ(j["config"]["physical.g0"], "3800000");
}

TEST(cli, error_report_csv) {
    const Result r = invoke({"error-report", "--encoding.alpha=1", "--encoding.beta=1.2", "--encoding.r=1.5",
                             "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("quantity,value\n"), std::string::npos);
    EXPECT_NE(r.out.find("\np_max,"), std::string::npos);
}
