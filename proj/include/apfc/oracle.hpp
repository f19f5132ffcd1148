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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apfc/adaptive.hpp"
#include "apfc/codebuilder.hpp"
#include "apfc/model.hpp"

namespace apfc {

// Reference decoders and bound checks used to validate the fast paths.
// These deliberately avoid the lookup-table decoder and the BitReader: the
// tree walk indexes bits with its own arithmetic.

// Explicit binary code tree. Decoding walks one bit at a time.
class CodeTree {
public:
    explicit CodeTree(const PrefixCode& code);

    // Decodes `count` symbols from bytes[0 .. bit_limit) MSB-first.
    std::vector<uint32_t> decode(std::span<const uint8_t> bytes,
                                 uint64_t bit_limit, uint64_t count) const;

private:
    struct Node {
        int32_t child[2] = {-1, -1};
        int32_t symbol = -1;
    };
    std::vector<Node> nodes_;
};

std::vector<uint32_t> tree_walk_decode(const PrefixCode& code,
                                       std::span<const uint8_t> bytes,
                                       uint64_t bit_limit, uint64_t count);

// Measured encoding length against the mode's per-symbol target (H+1 for
// shannon, H+2 for alphabetic), with a lower-order allowance of
// c * sigma^2 * L^2 / n bits per symbol.
struct BoundReport {
    uint64_t n = 0;
    uint32_t sigma = 0;
    CodingMode mode = CodingMode::shannon;
    double entropy = 0.0;
    uint64_t payload_bits = 0;
    double per_symbol = 0.0;
    double target = 0.0;
    double slack = 0.0;     // per_symbol - target
    double allowance = 0.0; // c * sigma^2 * L^2 / n
    bool pass = false;      // slack <= allowance

    // Flat key=value lines for CLI and CI consumption.
    std::string to_text() const;
};

inline constexpr double kDefaultAllowanceConstant = 4.0;

BoundReport make_bound_report(std::span<const uint64_t> counts, uint64_t n,
                              uint32_t sigma, CodingMode mode,
                              uint64_t payload_bits,
                              double allowance_constant);

// Encodes S and reports the realized per-symbol length against the bound.
template <std::unsigned_integral Sym>
BoundReport verify_bound(std::span<const Sym> input, uint32_t sigma,
                         CodingMode mode,
                         double allowance_constant = kDefaultAllowanceConstant) {
    if (input.empty())
        throw UsageError("verify_bound: input must be nonempty");
    const Payload payload = encode_stream(input, sigma, mode);
    std::vector<uint64_t> counts(sigma, 0);
    for (const Sym s : input)
        ++counts[static_cast<uint32_t>(s)];
    return make_bound_report(counts, input.size(), sigma, mode,
                             payload.bit_count, allowance_constant);
}

// Maximum codeword length the encoder emits for S. Always bounded by the
// stream's decode window width.
template <std::unsigned_integral Sym>
unsigned per_symbol_length_audit(std::span<const Sym> input, uint32_t sigma,
                                 CodingMode mode) {
    if (input.empty())
        throw UsageError("per_symbol_length_audit: input must be nonempty");
    unsigned max_length = 0;
    encode_stream(input, sigma, mode, [&](uint32_t, const Codeword& w) {
        max_length = std::max<unsigned>(max_length, w.length);
    });
    return max_length;
}

} // namespace apfc
