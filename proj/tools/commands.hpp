/*
Copyright 2026 the apfc authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <string>

#include "apfc/adaptive.hpp"

namespace apfc::cli {

// Exit codes, also documented in --help and the README.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // bad arguments or preconditions
inline constexpr int kExitFormat = 3; // malformed container or corrupt payload
inline constexpr int kExitIo = 4;     // file system failure

enum class Command { encode, decode, stats };

enum class SigmaPolicy {
    fixed_256,          // sigma = 256 regardless of content
    scan_max_plus_one,  // sigma = max byte value + 1 (at least 2)
};

struct CliConfig {
    Command command = Command::encode;
    CodingMode mode = CodingMode::shannon; // encode/stats only
    SigmaPolicy sigma_policy = SigmaPolicy::scan_max_plus_one;
    std::string input_path;
    std::string output_path; // encode/decode only
};

// Each command returns one of the exit codes above and reports failures on
// standard error.
int cmd_encode(const CliConfig& config);
int cmd_decode(const CliConfig& config);
int cmd_stats(const CliConfig& config);

int run_command(const CliConfig& config);

} // namespace apfc::cli
