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

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include "apfc/container.hpp"
#include "apfc/oracle.hpp"

namespace apfc::cli {

namespace {

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open input file: " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failure: " + path);
    return data;
}

void write_file(const std::string& path, std::span<const uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
        out.close();
        std::remove(path.c_str()); // leave no partial output behind
        throw IoError("write failure: " + path);
    }
}

uint32_t choose_sigma(SigmaPolicy policy, std::span<const uint8_t> data) {
    if (policy == SigmaPolicy::fixed_256)
        return 256;
    uint32_t max_symbol = 0;
    for (const uint8_t b : data)
        max_symbol = std::max<uint32_t>(max_symbol, b);
    // The header requires sigma >= 2; empty and all-0x00 inputs clamp up.
    return std::max<uint32_t>(2, max_symbol + 1);
}

std::vector<uint64_t> histogram(std::span<const uint8_t> data, uint32_t sigma) {
    std::vector<uint64_t> counts(sigma, 0);
    for (const uint8_t b : data)
        ++counts[b];
    return counts;
}

int run_encode(const CliConfig& config) {
    const std::vector<uint8_t> data = read_file(config.input_path);
    const uint64_t n = data.size();
    const uint32_t sigma = choose_sigma(config.sigma_policy, data);

    Payload payload;
    EntropyReport report;
    if (n > 0) {
        payload = encode_stream(std::span<const uint8_t>(data), sigma, config.mode);
        report = make_entropy_report(histogram(data, sigma), n, payload.bit_count);

        const AlphabetParams params = derive_params(sigma, n);
        const uint128 sl = uint128(sigma) * params.log_n;
        if (sl * sl >= n)
            std::cerr << "warning: sigma^2*L^2 >= n; the H+1/H+2 redundancy "
                         "guarantees need longer inputs for this alphabet\n";
    }

    const StreamHeader header{config.mode, n, sigma};
    write_file(config.output_path, write_container(header, payload.bytes));

    std::cerr << "n=" << n << '\n'
              << "sigma=" << sigma << '\n'
              << "H=" << report.entropy << '\n'
              << "payload_bits=" << payload.bit_count << '\n'
              << "bits_per_symbol="
              << (n > 0 ? static_cast<double>(payload.bit_count) /
                              static_cast<double>(n)
                        : 0.0)
              << '\n';
    return kExitOk;
}

int run_decode(const CliConfig& config) {
    const std::vector<uint8_t> data = read_file(config.input_path);
    Container container = read_container(data);
    if (container.header.sigma > 256)
        throw FormatError("container alphabet does not fit byte symbols");

    std::vector<uint8_t> output;
    if (container.header.n > 0)
        output = decode_stream<uint8_t>(container.payload, container.header.sigma,
                                        container.header.n, container.header.mode);
    write_file(config.output_path, output);
    return kExitOk;
}

int run_stats(const CliConfig& config) {
    const std::vector<uint8_t> data = read_file(config.input_path);
    if (data.empty())
        throw UsageError("stats: input is empty");
    const uint32_t sigma = choose_sigma(config.sigma_policy, data);
    const BoundReport report =
        verify_bound(std::span<const uint8_t>(data), sigma, config.mode);
    std::cout << report.to_text();
    return kExitOk;
}

} // namespace

int run_command(const CliConfig& config) {
    try {
        switch (config.command) {
        case Command::encode:
            return run_encode(config);
        case Command::decode:
            return run_decode(config);
        case Command::stats:
            return run_stats(config);
        }
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const CorruptStreamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

int cmd_encode(const CliConfig& config) {
    CliConfig c = config;
    c.command = Command::encode;
    return run_command(c);
}

int cmd_decode(const CliConfig& config) {
    CliConfig c = config;
    c.command = Command::decode;
    return run_command(c);
}

int cmd_stats(const CliConfig& config) {
    CliConfig c = config;
    c.command = Command::stats;
    return run_command(c);
}

} // namespace apfc::cli
