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

#include "apfc/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace apfc {

CodeTree::CodeTree(const PrefixCode& code) {
    nodes_.emplace_back();
    for (uint32_t symbol = 0; symbol < code.sigma(); ++symbol) {
        const Codeword w = code[symbol];
        if (w.length == 0)
            throw UsageError("CodeTree: zero-length codeword");
        int32_t node = 0;
        for (int t = w.length - 1; t >= 0; --t) {
            const unsigned bit = (w.bits >> t) & 1u;
            if (nodes_[node].symbol >= 0)
                throw UsageError("CodeTree: code is not prefix-free");
            int32_t next = nodes_[node].child[bit];
            if (next < 0) {
                // growing nodes_ invalidates references into it, so write
                // the child index back before appending
                next = static_cast<int32_t>(nodes_.size());
                nodes_[node].child[bit] = next;
                nodes_.emplace_back();
            }
            node = next;
        }
        if (nodes_[node].symbol >= 0 || nodes_[node].child[0] >= 0 ||
            nodes_[node].child[1] >= 0)
            throw UsageError("CodeTree: code is not prefix-free");
        nodes_[node].symbol = static_cast<int32_t>(symbol);
    }
}

std::vector<uint32_t> CodeTree::decode(std::span<const uint8_t> bytes,
                                       uint64_t bit_limit,
                                       uint64_t count) const {
    if (bit_limit > bytes.size() * 8ull)
        throw UsageError("CodeTree::decode: bit limit exceeds the buffer");
    std::vector<uint32_t> out;
    out.reserve(count);
    uint64_t pos = 0;
    for (uint64_t j = 0; j < count; ++j) {
        int32_t node = 0;
        while (nodes_[node].symbol < 0) {
            if (pos >= bit_limit)
                throw CorruptStreamError("tree walk: codeword incomplete");
            const unsigned bit = (bytes[pos >> 3] >> (7 - (pos & 7))) & 1u;
            ++pos;
            node = nodes_[node].child[bit];
            if (node < 0)
                throw CorruptStreamError("tree walk: walked off the code tree");
        }
        out.push_back(static_cast<uint32_t>(nodes_[node].symbol));
    }
    return out;
}

std::vector<uint32_t> tree_walk_decode(const PrefixCode& code,
                                       std::span<const uint8_t> bytes,
                                       uint64_t bit_limit, uint64_t count) {
    return CodeTree(code).decode(bytes, bit_limit, count);
}

BoundReport make_bound_report(std::span<const uint64_t> counts, uint64_t n,
                              uint32_t sigma, CodingMode mode,
                              uint64_t payload_bits,
                              double allowance_constant) {
    const AlphabetParams params = derive_params(sigma, n);
    BoundReport report;
    report.n = n;
    report.sigma = sigma;
    report.mode = mode;
    report.entropy = empirical_entropy(counts, n);
    report.payload_bits = payload_bits;
    report.per_symbol = static_cast<double>(payload_bits) / static_cast<double>(n);
    report.target =
        report.entropy + (mode == CodingMode::alphabetic ? 2.0 : 1.0);
    report.slack = report.per_symbol - report.target;
    const double sl = static_cast<double>(sigma) * params.log_n;
    report.allowance = allowance_constant * sl * sl / static_cast<double>(n);
    report.pass = report.slack <= report.allowance;
    return report;
}

std::string BoundReport::to_text() const {
    std::ostringstream out;
    out << "n=" << n << '\n';
    out << "sigma=" << sigma << '\n';
    out << "mode=" << (mode == CodingMode::alphabetic ? "alphabetic" : "shannon")
        << '\n';
    out << "H=" << entropy << '\n';
    out << "payload_bits=" << payload_bits << '\n';
    out << "bits_per_symbol=" << per_symbol << '\n';
    out << "target=" << target << '\n';
    out << "slack=" << slack << '\n';
    out << "allowance=" << allowance << '\n';
    out << "pass=" << (pass ? "true" : "false") << '\n';
    return out.str();
}

} // namespace apfc
