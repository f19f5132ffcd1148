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

#include "apfc/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace apfc {

AlphabetParams derive_params(uint32_t sigma, uint64_t n) {
    if (sigma < 2)
        throw UsageError("derive_params: alphabet size must be at least 2");
    if (n < 1)
        throw UsageError("derive_params: input length must be at least 1");
    AlphabetParams params;
    params.sigma = sigma;
    params.n = n;
    params.log_n = std::max(1u, ceil_log2(n));
    params.block_size = static_cast<uint64_t>(sigma) * params.log_n;
    return params;
}

FrequencyTable::FrequencyTable(uint32_t sigma) {
    if (sigma < 2)
        throw UsageError("FrequencyTable: alphabet size must be at least 2");
    counts_.assign(sigma, 0);
}

FrequencyTable::FrequencyTable(std::vector<uint64_t> counts)
    : counts_(std::move(counts)) {
    if (counts_.size() < 2)
        throw UsageError("FrequencyTable: alphabet size must be at least 2");
    processed_ = std::accumulate(counts_.begin(), counts_.end(), uint64_t{0});
}

SmoothedDistribution smoothed_distribution(const FrequencyTable& freq,
                                           const AlphabetParams& params,
                                           uint64_t completed_blocks) {
    if (completed_blocks == 0)
        throw UsageError(
            "smoothed_distribution: no completed block yet; the first block "
            "uses the fixed-length code");
    if (freq.sigma() != params.sigma)
        throw UsageError("smoothed_distribution: alphabet size mismatch");
    const uint128 kb = uint128(completed_blocks) * params.block_size;
    if (freq.processed() != kb)
        throw UsageError(
            "smoothed_distribution: must be called exactly at a block boundary");

    // numerators[i] = (L-1)*sigma*counts[i] + k*b, denominator = L*sigma*k*b.
    // Identity: sum(numerators) = (L-1)*sigma*kb + sigma*kb = denominator.
    const uint128 weight = uint128(params.log_n - 1) * params.sigma;
    SmoothedDistribution dist;
    dist.numerators.reserve(params.sigma);
    for (const uint64_t c : freq.counts())
        dist.numerators.push_back(weight * c + kb);
    dist.denominator = uint128(params.log_n) * params.sigma * kb;
    return dist;
}

double empirical_entropy(std::span<const uint64_t> counts, uint64_t n) {
    if (n < 1)
        throw UsageError("empirical_entropy: n must be at least 1");
    uint64_t total = 0;
    for (const uint64_t c : counts)
        total += c;
    if (total != n)
        throw UsageError("empirical_entropy: counts do not sum to n");
    double h = 0.0;
    const double dn = static_cast<double>(n);
    for (const uint64_t c : counts) {
        if (c == 0)
            continue;
        const double p = static_cast<double>(c) / dn;
        h -= p * std::log2(p);
    }
    return h;
}

EntropyReport make_entropy_report(std::span<const uint64_t> counts, uint64_t n,
                                  uint64_t total_bits) {
    EntropyReport report;
    report.entropy = empirical_entropy(counts, n);
    report.total_bits = total_bits;
    report.slack_per_symbol =
        static_cast<double>(total_bits) / static_cast<double>(n) - report.entropy;
    return report;
}

} // namespace apfc
