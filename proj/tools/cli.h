// Copyright 2026 The extwit Authors
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

#ifndef EXTWIT_TOOLS_CLI_H
#define EXTWIT_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extwit/hermitian_operator.h"

namespace extwit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

struct RunConfig {
    uint64_t seed = 42;
    int restarts = 64;
    double tol = 1e-9;
    int trials = 1000;
    std::string json_out;
    bool quiet = false;
};

/// Runs one command line (without the program name). JSON goes to `out`
/// unless --json-out is given; the summary table goes to `err` unless --quiet.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Catalogue entries addressable as "@name" wherever an operator file is
/// expected: choi, swap, identity, ppt-state.
std::optional<HermitianOperator> catalogue_operator(const std::string &name);

std::vector<std::string> catalogue_names();

}  // namespace extwit::cli

#endif
