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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "apfc/adaptive.hpp"
#include "apfc/bitio.hpp"

namespace apfc {

// APFC v1 container, 18 header bytes then the padded payload:
//   offset 0   magic "APFC"
//   offset 4   version (0x01)
//   offset 5   mode (0x00 shannon, 0x01 alphabetic)
//   offset 6   n, 8-byte big-endian
//   offset 14  sigma, 4-byte big-endian
inline constexpr std::array<uint8_t, 4> kContainerMagic = {'A', 'P', 'F', 'C'};
inline constexpr uint8_t kContainerVersion = 0x01;
inline constexpr size_t kContainerHeaderBytes = 18;

struct StreamHeader {
    CodingMode mode = CodingMode::shannon;
    uint64_t n = 0; // n = 0 means an empty payload
    uint32_t sigma = 2;
};

// Header bytes followed by the payload bytes (already zero-padded to a whole
// byte by the bit writer).
std::vector<uint8_t> write_container(const StreamHeader& header,
                                     std::span<const uint8_t> payload);

// Parsed container; `payload` views the input bytes, with its bit limit set
// to 8 * (file size - header size). The decoder stops by symbol count, so
// trailing pad bits are never consumed.
struct Container {
    StreamHeader header;
    BitReader payload;
};

Container read_container(std::span<const uint8_t> bytes);

} // namespace apfc
