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

#ifndef IONCOMB_CLI_OUTPUT_H
#define IONCOMB_CLI_OUTPUT_H

#include <initializer_list>
#include <ostream>
#include <string>

#include "cli/config.h"
#include "json.hpp"

namespace ioncomb::cli {

using Json = nlohmann::ordered_json;

/// Comment block opening every CSV file: the command and the resolved config.
std::string csv_preamble(const std::string &command, const RunConfig &config);

/// One CSV line (LF terminated) from already formatted cells.
std::string csv_line(std::initializer_list<std::string> cells);

Json config_json(const RunConfig &config);

/// Finite numbers as-is, NaN and infinities as null.
Json number(double v);

/// Writes `text` to `path` (binary, so LF stays LF), or to `fallback` when
/// the path is empty or "-".
void emit(const std::string &path, const std::string &text, std::ostream &fallback);

/// JSON text with a trailing newline.
std::string dump(const Json &j);

}  // namespace ioncomb::cli

#endif
