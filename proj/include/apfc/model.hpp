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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "apfc/errors.hpp"

namespace apfc {

// Wide integer for exact rational probabilities. The denominators reach
// sigma^2 * L^2 * (n/b) * b = O(sigma * L * n), past 64 bits for large
// alphabets on large inputs.
using uint128 = unsigned __int128;

// Smallest e with 2^e >= x, for x >= 1.
inline unsigned ceil_log2(uint64_t x) {
    if (x == 0)
        throw UsageError("ceil_log2: argument must be positive");
    return static_cast<unsigned>(std::bit_width(x - 1));
}

inline unsigned bit_width_u128(uint128 x) {
    const uint64_t hi = static_cast<uint64_t>(x >> 64);
    if (hi != 0)
        return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<uint64_t>(x));
}

// Per-stream coding parameters. L stands in for lg n as an exact integer:
// the smallest L >= 1 with 2^L >= n. Block size is b = sigma * L symbols.
struct AlphabetParams {
    uint32_t sigma = 0;
    uint64_t n = 0;
    unsigned log_n = 0;      // L
    uint64_t block_size = 0; // b
};

AlphabetParams derive_params(uint32_t sigma, uint64_t n);

// Running occurrence counts over the alphabet.
class FrequencyTable {
public:
    explicit FrequencyTable(uint32_t sigma);

    // Restores a table from explicit counts; processed becomes their sum.
    explicit FrequencyTable(std::vector<uint64_t> counts);

    void record(uint32_t symbol) {
        if (symbol >= counts_.size())
            throw UsageError("record: symbol out of range");
        ++counts_[symbol];
        ++processed_;
    }

    uint32_t sigma() const { return static_cast<uint32_t>(counts_.size()); }
    uint64_t processed() const { return processed_; }
    uint64_t count(uint32_t symbol) const { return counts_.at(symbol); }
    std::span<const uint64_t> counts() const { return counts_; }

private:
    std::vector<uint64_t> counts_;
    uint64_t processed_ = 0;
};

// Exact rational probability vector: p_i = numerators[i] / denominator,
// with sum(numerators) == denominator and every p_i >= 1/(sigma*L).
struct SmoothedDistribution {
    std::vector<uint128> numerators;
    uint128 denominator = 0;
};

// The block-boundary distribution: a weighted average of the observed
// frequencies and the uniform distribution,
//   p_i = ((L-1)/L) * counts[i]/(k*b) + 1/(sigma*L),
// held exactly as numerators[i] = (L-1)*sigma*counts[i] + k*b over
// denominator = L*sigma*k*b. Must be called at a block boundary, i.e. with
// processed == k*b and k >= 1.
SmoothedDistribution smoothed_distribution(const FrequencyTable& freq,
                                           const AlphabetParams& params,
                                           uint64_t completed_blocks);

// Sum over occurring symbols of (c/n) * lg(n/c), in bits per symbol.
double empirical_entropy(std::span<const uint64_t> counts, uint64_t n);

// Reporting summary for an encoded stream.
struct EntropyReport {
    double entropy = 0.0;          // H, bits per symbol
    uint64_t total_bits = 0;       // encoded payload length
    double slack_per_symbol = 0.0; // total_bits/n - H
};

EntropyReport make_entropy_report(std::span<const uint64_t> counts, uint64_t n,
                                  uint64_t total_bits);

} // namespace apfc
