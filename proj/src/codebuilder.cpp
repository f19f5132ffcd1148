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

#include "apfc/codebuilder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apfc {

namespace {

void validate_distribution(const SmoothedDistribution& dist) {
    if (dist.numerators.empty())
        throw UsageError("code builder: empty distribution");
    uint128 sum = 0;
    for (const uint128 num : dist.numerators) {
        if (num == 0)
            throw UsageError("code builder: zero-probability symbol");
        sum += num;
    }
    if (sum != dist.denominator)
        throw UsageError("code builder: probabilities do not sum to 1");
}

} // namespace

PrefixCode::PrefixCode(CodeKind kind, std::vector<Codeword> words)
    : words_(std::move(words)), kind_(kind) {
    for (const Codeword& w : words_)
        max_length_ = std::max(max_length_, w.length);
}

PrefixCode fixed_length_code(uint32_t sigma) {
    if (sigma < 2)
        throw UsageError("fixed_length_code: alphabet size must be at least 2");
    const unsigned width = ceil_log2(sigma);
    std::vector<Codeword> words(sigma);
    for (uint32_t i = 0; i < sigma; ++i)
        words[i] = {i, static_cast<uint8_t>(width)};
    return {CodeKind::fixed_length, std::move(words)};
}

std::vector<uint8_t> shannon_lengths(const SmoothedDistribution& dist) {
    validate_distribution(dist);
    std::vector<uint8_t> lengths;
    lengths.reserve(dist.numerators.size());
    for (const uint128 num : dist.numerators) {
        // smallest l with num * 2^l >= den, i.e. 2^l >= ceil(den/num)
        const uint128 ratio = (dist.denominator + num - 1) / num;
        unsigned l = ratio <= 1 ? 0 : bit_width_u128(ratio - 1);
        l = std::max(l, 1u); // a zero-length codeword is unusable (p = 1)
        if (l > 64)
            throw UsageError("shannon_lengths: codeword length exceeds 64 bits");
        lengths.push_back(static_cast<uint8_t>(l));
    }
    return lengths;
}

PrefixCode canonical_assign(std::span<const uint8_t> lengths) {
    if (lengths.empty())
        throw UsageError("canonical_assign: empty length vector");
    for (const uint8_t l : lengths)
        if (l == 0 || l > 64)
            throw UsageError("canonical_assign: lengths must be in 1..64");

    std::vector<uint32_t> order(lengths.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return lengths[a] != lengths[b] ? lengths[a] < lengths[b] : a < b;
    });

    std::vector<Codeword> words(lengths.size());
    uint128 code = 0;
    unsigned prev_len = lengths[order.front()];
    bool first = true;
    for (const uint32_t symbol : order) {
        const unsigned len = lengths[symbol];
        if (!first)
            code = (code + 1) << (len - prev_len);
        // Overflow of the len-bit space means the lengths violate Kraft,
        // which the length producers rule out.
        if ((code >> len) != 0)
            throw std::logic_error("canonical_assign: length vector violates Kraft");
        words[symbol] = {static_cast<uint64_t>(code), static_cast<uint8_t>(len)};
        prev_len = len;
        first = false;
    }
    return {CodeKind::shannon, std::move(words)};
}

PrefixCode gilbert_moore_code(const SmoothedDistribution& dist) {
    const std::vector<uint8_t> base = shannon_lengths(dist);

    std::vector<Codeword> words(base.size());
    const uint128 twice_den = 2 * dist.denominator;
    uint128 prefix_sum = 0;
    for (size_t i = 0; i < base.size(); ++i) {
        const unsigned len = base[i] + 1u;
        if (len > 64)
            throw UsageError("gilbert_moore_code: codeword length exceeds 64 bits");
        // First len bits of F_i = (2*prefix_sum + num_i) / (2*den), extracted
        // by exact doubling; floating point can mis-round dyadic boundaries
        // and break prefix-freeness.
        uint128 rem = 2 * prefix_sum + dist.numerators[i];
        uint64_t bits = 0;
        for (unsigned t = 0; t < len; ++t) {
            rem <<= 1;
            bits <<= 1;
            if (rem >= twice_den) {
                rem -= twice_den;
                bits |= 1;
            }
        }
        words[i] = {bits, static_cast<uint8_t>(len)};
        prefix_sum += dist.numerators[i];
    }
    return {CodeKind::gilbert_moore, std::move(words)};
}

} // namespace apfc
