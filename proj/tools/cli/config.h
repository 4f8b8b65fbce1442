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

#ifndef IONCOMB_CLI_CONFIG_H
#define IONCOMB_CLI_CONFIG_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ioncomb/ideal_code.h"
#include "ioncomb/physical_limits.h"
#include "ioncomb/params.h"

namespace ioncomb::cli {

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCompute = 3;

/// Environment variable holding the default worker count ("auto" or N).
inline constexpr const char *kThreadsEnv = "IONCOMB_THREADS";

enum class Format { csv, json };

/// Dotted key -> raw value text. Later sources overwrite earlier ones.
using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. '#' starts a comment; blank lines are ignored.
KeyValues parse_config_text(std::string_view text, std::string_view origin = "config");

KeyValues load_config_file(const std::string &path);

/// Turns `--key=value` / `--key value` tokens into entries.
KeyValues parse_overrides(const std::vector<std::string> &tokens);

struct RunConfig {
    EncodingParams encoding;
    std::optional<PhysicalParams> physical;
    double tolerance = 1e-14;
    std::string out;  // empty or "-" writes to stdout
    std::optional<Format> format;
    int threads = 1;
    std::string threads_text = "1";
    double beta_tolerance = 0.05;

    Codeword label = Codeword::zero;
    char axis = 'x';  // 'x' or 'p'

    double alpha_lo = 0.0;
    double alpha_hi = 5.5;
    int n_points = 23;
    std::vector<double> r_list{1.5};

    double x_lo = -0.5;
    double x_hi = 0.5;
    int error_samples = 9;

    /// Every key with its resolved value, in a fixed order.
    std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Every key the resolver accepts.
const std::vector<std::string> &known_keys();

/// Resolves raw entries on top of the defaults. `threads_default` is used
/// when no run.threads entry is present. Throws UsageError naming the key.
RunConfig resolve(const KeyValues &values, const std::string &threads_default = "1");

/// "auto" -> hardware concurrency, otherwise a positive integer.
int parse_threads(const std::string &text, const std::string &key = "run.threads");

std::string format_double(double v);

}  // namespace ioncomb::cli

#endif
