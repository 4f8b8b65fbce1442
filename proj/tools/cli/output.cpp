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

#include "cli/output.h"

#include <cmath>
#include <fstream>

namespace ioncomb::cli {

std::string csv_preamble(const std::string &command, const RunConfig &config) {
    std::string s = "# ioncomb " + command + "\n";
    for (const auto &[key, value] : config.entries()) {
        s += "# " + key + " = " + value + "\n";
    }
    return s;
}

std::string csv_line(std::initializer_list<std::string> cells) {
    std::string s;
    bool first = true;
    for (const std::string &c : cells) {
        if (!first) {
            s += ',';
        }
        s += c;
        first = false;
    }
    s += '\n';
    return s;
}

Json config_json(const RunConfig &config) {
    Json j = Json::object();
    for (const auto &[key, value] : config.entries()) {
        j[key] = value;
    }
    return j;
}

Json number(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

void emit(const std::string &path, const std::string &text, std::ostream &fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        fallback.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw UsageError("cannot write output file '" + path + "'");
    }
    out << text;
    if (!out) {
        throw UsageError("failed while writing '" + path + "'");
    }
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

}  // namespace ioncomb::cli
