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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "apfc/container.hpp"
#include "commands.hpp"
#include "test_util.hpp"

using namespace apfc;
using namespace apfc::cli;

namespace {

CliConfig make_config(Command command, const std::string& in,
                      const std::string& out = "",
                      CodingMode mode = CodingMode::shannon,
                      SigmaPolicy policy = SigmaPolicy::scan_max_plus_one) {
    CliConfig config;
    config.command = command;
    config.mode = mode;
    config.sigma_policy = policy;
    config.input_path = in;
    config.output_path = out;
    return config;
}

void roundtrip_file(const std::vector<uint8_t>& content, CodingMode mode,
                    SigmaPolicy policy, const std::string& tag) {
    const std::string plain = test::temp_path(tag + ".bin");
    const std::string packed = test::temp_path(tag + ".apfc");
    const std::string restored = test::temp_path(tag + ".out");
    test::write_file_bytes(plain, content);

    REQUIRE(run_command(make_config(Command::encode, plain, packed, mode,
                                    policy)) == kExitOk);
    REQUIRE(run_command(make_config(Command::decode, packed, restored)) ==
            kExitOk);
    CHECK(test::read_file_bytes(restored) == content);
}

int run_tool(const std::string& args) {
    const std::string cmd =
        std::string(APFC_TOOL_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("files of every shape roundtrip byte for byte") {
    std::mt19937_64 rng(31);

    roundtrip_file({}, CodingMode::shannon, SigmaPolicy::scan_max_plus_one,
                   "empty");
    roundtrip_file({0x42}, CodingMode::shannon,
                   SigmaPolicy::scan_max_plus_one, "single");
    roundtrip_file({0x42}, CodingMode::alphabetic, SigmaPolicy::fixed_256,
                   "single256");

    const std::string text =
        "the quick brown fox jumps over the lazy dog, twice: "
        "the quick brown fox jumps over the lazy dog.";
    roundtrip_file(std::vector<uint8_t>(text.begin(), text.end()),
                   CodingMode::shannon, SigmaPolicy::scan_max_plus_one, "text");
    roundtrip_file(std::vector<uint8_t>(text.begin(), text.end()),
                   CodingMode::alphabetic, SigmaPolicy::scan_max_plus_one,
                   "text_alpha");

    std::vector<uint8_t> all_values(4096);
    for (size_t i = 0; i < all_values.size(); ++i)
        all_values[i] = static_cast<uint8_t>(i & 0xFF);
    roundtrip_file(all_values, CodingMode::shannon, SigmaPolicy::fixed_256,
                   "all_values");

    roundtrip_file(test::uniform_symbols<uint8_t>(rng, 10'000, 256),
                   CodingMode::alphabetic, SigmaPolicy::fixed_256, "random");
    roundtrip_file(test::skewed_symbols<uint8_t>(rng, 10'000, 256),
                   CodingMode::shannon, SigmaPolicy::scan_max_plus_one,
                   "skewed");
}

TEST_CASE("encode output is byte-for-byte reproducible") {
    const std::vector<uint8_t> content{0x00, 0x01, 0x01, 0x00};
    const std::string plain = test::temp_path("golden_in.bin");
    const std::string packed = test::temp_path("golden_out.apfc");
    test::write_file_bytes(plain, content);
    REQUIRE(run_command(make_config(Command::encode, plain, packed)) ==
            kExitOk);
    const std::vector<uint8_t> expected{
        0x41, 0x50, 0x46, 0x43, 0x01, 0x00,
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x04,
        0x00, 0x00, 0x00, 0x02,
        0x60,
    };
    CHECK(test::read_file_bytes(packed) == expected);
}

TEST_CASE("empty input produces a bare header container") {
    const std::string plain = test::temp_path("bare_in.bin");
    const std::string packed = test::temp_path("bare_out.apfc");
    test::write_file_bytes(plain, {});
    REQUIRE(run_command(make_config(Command::encode, plain, packed)) ==
            kExitOk);
    const std::vector<uint8_t> expected{
        0x41, 0x50, 0x46, 0x43, 0x01, 0x00,
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        0x00, 0x00, 0x00, 0x02,
    };
    CHECK(test::read_file_bytes(packed) == expected);
}

TEST_CASE("alphabetic container for a run of zero bytes") {
    const std::string plain = test::temp_path("zeros_in.bin");
    const std::string packed = test::temp_path("zeros_out.apfc");
    test::write_file_bytes(plain, std::vector<uint8_t>(8, 0));
    REQUIRE(run_command(make_config(Command::encode, plain, packed,
                                    CodingMode::alphabetic)) == kExitOk);
    const std::vector<uint8_t> expected{
        0x41, 0x50, 0x46, 0x43, 0x01, 0x01,
        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x08,
        0x00, 0x00, 0x00, 0x02,
        0x01, 0x40,
    };
    CHECK(test::read_file_bytes(packed) == expected);
}

TEST_CASE("the sigma policy controls the container header") {
    const std::string plain = test::temp_path("sigma_in.bin");
    const std::string packed = test::temp_path("sigma_out.apfc");
    test::write_file_bytes(plain, {0x05, 0x02});

    REQUIRE(run_command(make_config(Command::encode, plain, packed,
                                    CodingMode::shannon,
                                    SigmaPolicy::scan_max_plus_one)) == kExitOk);
    CHECK(read_container(test::read_file_bytes(packed)).header.sigma == 6);

    REQUIRE(run_command(make_config(Command::encode, plain, packed,
                                    CodingMode::shannon,
                                    SigmaPolicy::fixed_256)) == kExitOk);
    CHECK(read_container(test::read_file_bytes(packed)).header.sigma == 256);
}

TEST_CASE("missing input maps to the io exit code") {
    const std::string absent = test::temp_path("no_such_file.bin");
    std::filesystem::remove(absent);
    CHECK(run_command(make_config(Command::encode, absent,
                                  test::temp_path("x.apfc"))) == kExitIo);
    CHECK(run_command(make_config(Command::decode, absent,
                                  test::temp_path("x.out"))) == kExitIo);
    CHECK(run_command(make_config(Command::stats, absent)) == kExitIo);
}

TEST_CASE("corrupt containers map to the format exit code") {
    const std::string packed = test::temp_path("corrupt.apfc");
    const std::string out = test::temp_path("corrupt.out");

    const std::vector<uint8_t> junk{'n', 'o', 't', ' ', 'a', 'p', 'f', 'c',
                                    0,   0,   0,   0,   0,   0,   0,   0,
                                    0,   0,   0,   0};
    test::write_file_bytes(packed, junk);
    CHECK(run_command(make_config(Command::decode, packed, out)) ==
          kExitFormat);
    CHECK_FALSE(std::filesystem::exists(out));

    // valid header claiming more symbols than the payload holds
    const std::vector<uint8_t> payload{0x00};
    test::write_file_bytes(
        packed, write_container(StreamHeader{CodingMode::shannon, 500, 2},
                                payload));
    CHECK(run_command(make_config(Command::decode, packed, out)) ==
          kExitFormat);
    CHECK_FALSE(std::filesystem::exists(out));

    // alphabet too wide for byte output
    test::write_file_bytes(
        packed, write_container(StreamHeader{CodingMode::shannon, 0, 300}, {}));
    CHECK(run_command(make_config(Command::decode, packed, out)) ==
          kExitFormat);
}

TEST_CASE("stats rejects an empty input") {
    const std::string plain = test::temp_path("stats_empty.bin");
    test::write_file_bytes(plain, {});
    CHECK(run_command(make_config(Command::stats, plain)) == kExitUsage);
}

TEST_CASE("unwritable output maps to the io exit code") {
    const std::string plain = test::temp_path("unwritable_in.bin");
    test::write_file_bytes(plain, {0x01, 0x02, 0x03});
    CHECK(run_command(make_config(Command::encode, plain,
                                  test::test_dir().string())) == kExitIo);
}

TEST_CASE("the binary reports usage errors and help as documented") {
    CHECK(run_tool("--help >/dev/null") == 0);
    CHECK(run_tool("encode --help >/dev/null") == 0);
    CHECK(run_tool("") == 2);
    CHECK(run_tool("encode") == 2);
    CHECK(run_tool("frobnicate in out") == 2);
    CHECK(run_tool("encode in out --mode sideways") == 2);
    CHECK(run_tool("encode in out --sigma many") == 2);
}

TEST_CASE("the binary roundtrips and reports stats end to end") {
    std::mt19937_64 rng(33);
    const std::vector<uint8_t> content =
        test::skewed_symbols<uint8_t>(rng, 5'000, 200);
    const std::string plain = test::temp_path("tool_in.bin");
    const std::string packed = test::temp_path("tool_out.apfc");
    const std::string restored = test::temp_path("tool_restored.bin");
    const std::string report = test::temp_path("tool_stats.txt");
    test::write_file_bytes(plain, content);

    CHECK(run_tool("encode " + plain + " " + packed +
                   " --mode alphabetic --sigma scan") == 0);
    CHECK(run_tool("decode " + packed + " " + restored) == 0);
    CHECK(test::read_file_bytes(restored) == content);

    CHECK(run_tool("stats " + plain + " --mode alphabetic > " + report) == 0);
    const std::vector<uint8_t> raw = test::read_file_bytes(report);
    const std::string text(raw.begin(), raw.end());
    CHECK(text.find("mode=alphabetic") != std::string::npos);
    CHECK(text.find("n=5000") != std::string::npos);
    CHECK(text.find("pass=") != std::string::npos);
}
