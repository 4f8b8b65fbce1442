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

#ifndef IONCOMB_CLI_COMMANDS_H
#define IONCOMB_CLI_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

#include "cli/config.h"

namespace ioncomb::cli {

/// Each command renders its whole output as text; `out` receives it when no
/// output path is configured. Sidecar files are written directly.
std::string cmd_wavefunction(const RunConfig &config);
std::string cmd_error_report(const RunConfig &config);
std::string cmd_sweep(const RunConfig &config);
std::string cmd_limits(const RunConfig &config);
std::string cmd_window(const RunConfig &config);

/// Sidecar path holding the sweep fit next to `out`.
std::string fit_sidecar_path(const std::string &out);

/// Full command-line entry point. `args` excludes the program name;
/// `threads_env` is the value of the threads environment variable or null.
/// Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const char *threads_env = nullptr);

}  // namespace ioncomb::cli

#endif
