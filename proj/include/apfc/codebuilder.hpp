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
#include <vector>

#include "apfc/model.hpp"

namespace apfc {

enum class CodeKind : uint8_t {
    fixed_length,  // every symbol gets ceil(lg sigma) bits
    shannon,       // canonical code over Shannon lengths
    gilbert_moore, // alphabetic code, lengths are Shannon lengths + 1
};

// Right-aligned codeword: bit (length-1) of `bits` goes on the wire first.
struct Codeword {
    uint64_t bits = 0;
    uint8_t length = 0;
};

// Per-symbol codeword table for one block. Prefix-free by construction.
class PrefixCode {
public:
    PrefixCode(CodeKind kind, std::vector<Codeword> words);

    CodeKind kind() const { return kind_; }
    uint32_t sigma() const { return static_cast<uint32_t>(words_.size()); }
    uint8_t max_length() const { return max_length_; }
    const Codeword& operator[](uint32_t symbol) const { return words_[symbol]; }
    const std::vector<Codeword>& codewords() const { return words_; }

private:
    std::vector<Codeword> words_;
    CodeKind kind_ = CodeKind::fixed_length;
    uint8_t max_length_ = 0;
};

// Symbol i gets the ceil(lg sigma)-bit binary representation of i.
PrefixCode fixed_length_code(uint32_t sigma);

// length_i = max(1, ceil(lg(denominator/numerators[i]))), the smallest l with
// numerators[i] * 2^l >= denominator. The lengths always satisfy Kraft.
std::vector<uint8_t> shannon_lengths(const SmoothedDistribution& dist);

// Canonical codeword assignment: symbols sorted by (length, symbol index)
// receive consecutive codewords, each previous + 1 shifted up to the next
// length. Deterministic for a given length vector.
PrefixCode canonical_assign(std::span<const uint8_t> lengths);

// Alphabetic code: length_i = Shannon length + 1; codeword_i is the first
// length_i bits of the binary expansion of sum_{j<i} p_j + p_i/2, extracted
// by exact rational doubling. Codewords are strictly increasing as binary
// fractions, so encoded streams preserve lexicographic order.
PrefixCode gilbert_moore_code(const SmoothedDistribution& dist);

} // namespace apfc
