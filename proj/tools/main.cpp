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

#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

const std::map<std::string, apfc::CodingMode> kModeNames = {
    {"shannon", apfc::CodingMode::shannon},
    {"alphabetic", apfc::CodingMode::alphabetic},
};

const std::map<std::string, apfc::cli::SigmaPolicy> kSigmaNames = {
    {"fixed256", apfc::cli::SigmaPolicy::fixed_256},
    {"scan", apfc::cli::SigmaPolicy::scan_max_plus_one},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "apfc - block-adaptive prefix-free coding (Shannon and alphabetic "
        "Gilbert-Moore modes)"};
    app.footer("Exit codes: 0 success, 2 usage error, 3 bad or corrupt "
               "container, 4 I/O error.");
    app.require_subcommand(1);

    apfc::cli::CliConfig config;

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", config.mode, "coding mode")
            ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case))
            ->default_str("shannon");
    };
    auto add_sigma = [&](CLI::App* cmd) {
        cmd->add_option("--sigma", config.sigma_policy,
                        "alphabet size policy: fixed256, or scan for max byte "
                        "value + 1 (at least 2)")
            ->transform(CLI::CheckedTransformer(kSigmaNames, CLI::ignore_case))
            ->default_str("scan");
    };

    CLI::App* encode =
        app.add_subcommand("encode", "Compress a file into an APFC container");
    encode->add_option("input", config.input_path, "file to compress")
        ->required();
    encode->add_option("output", config.output_path, "container to write")
        ->required();
    add_mode(encode);
    add_sigma(encode);

    CLI::App* decode =
        app.add_subcommand("decode", "Expand an APFC container back to bytes");
    decode->add_option("input", config.input_path, "container to read")
        ->required();
    decode->add_option("output", config.output_path, "file to write")
        ->required();

    CLI::App* stats = app.add_subcommand(
        "stats", "Report entropy and redundancy for a file without writing "
                 "anything");
    stats->add_option("input", config.input_path, "file to analyze")->required();
    add_mode(stats);
    add_sigma(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : apfc::cli::kExitUsage;
    }

    if (encode->parsed())
        config.command = apfc::cli::Command::encode;
    else if (decode->parsed())
        config.command = apfc::cli::Command::decode;
    else
        config.command = apfc::cli::Command::stats;

    return apfc::cli::run_command(config);
}
