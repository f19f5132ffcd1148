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

#include "apfc/container.hpp"

#include <algorithm>

namespace apfc {

namespace {

void put_be(std::vector<uint8_t>& out, uint64_t value, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i)
        out.push_back(static_cast<uint8_t>(value >> (8 * (bytes - 1 - i))));
}

uint64_t get_be(std::span<const uint8_t> in, size_t offset, unsigned bytes) {
    uint64_t value = 0;
    for (unsigned i = 0; i < bytes; ++i)
        value = (value << 8) | in[offset + i];
    return value;
}

} // namespace

std::vector<uint8_t> write_container(const StreamHeader& header,
                                     std::span<const uint8_t> payload) {
    if (header.sigma < 2)
        throw UsageError("write_container: alphabet size must be at least 2");
    if (header.mode != CodingMode::shannon && header.mode != CodingMode::alphabetic)
        throw UsageError("write_container: bad coding mode");
    std::vector<uint8_t> out;
    out.reserve(kContainerHeaderBytes + payload.size());
    for (uint8_t byte : kContainerMagic)
        out.push_back(byte);
    out.push_back(kContainerVersion);
    out.push_back(static_cast<uint8_t>(header.mode));
    put_be(out, header.n, 8);
    put_be(out, header.sigma, 4);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Container read_container(std::span<const uint8_t> bytes) {
    if (bytes.size() < kContainerHeaderBytes)
        throw FormatError("container: file shorter than the header");
    if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), bytes.begin()))
        throw FormatError("container: bad magic");
    if (bytes[4] != kContainerVersion)
        throw FormatError("container: unsupported version");
    if (bytes[5] > 1)
        throw FormatError("container: bad mode byte");

    StreamHeader header;
    header.mode = static_cast<CodingMode>(bytes[5]);
    header.n = get_be(bytes, 6, 8);
    header.sigma = static_cast<uint32_t>(get_be(bytes, 14, 4));
    if (header.sigma < 2)
        throw FormatError("container: alphabet size below 2");

    const std::span<const uint8_t> payload = bytes.subspan(kContainerHeaderBytes);
    return Container{header, BitReader(payload, payload.size() * 8ull)};
}

} // namespace apfc
