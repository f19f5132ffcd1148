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

#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "apfc/bitio.hpp"
#include "apfc/codebuilder.hpp"
#include "apfc/decodetable.hpp"
#include "apfc/model.hpp"

namespace apfc {

enum class CodingMode : uint8_t {
    shannon = 0,    // canonical Shannon code per block
    alphabetic = 1, // Gilbert-Moore code per block, order-preserving
};

// The mode's code over a block-boundary distribution.
PrefixCode build_block_code(const SmoothedDistribution& dist, CodingMode mode);

// Fixed decode-table width for a whole stream: ceil(lg(sigma*L)) in shannon
// mode, one more in alphabetic mode, and never below the first block's
// ceil(lg sigma). The smoothing floor keeps every block's codewords within
// this width.
unsigned decode_window_width(const AlphabetParams& params, CodingMode mode);

// Block-adaptive coding state, advanced identically by encoder and decoder:
// counts update after every symbol, the code in force changes only when the
// position crosses a multiple of b and input remains. Positions 1..b use the
// fixed-length code.
class CoderState {
public:
    CoderState(const AlphabetParams& params, CodingMode mode);

    const AlphabetParams& params() const { return params_; }
    CodingMode mode() const { return mode_; }
    const PrefixCode& code() const { return code_; }
    const FrequencyTable& freq() const { return freq_; }
    uint64_t position() const { return position_; }
    uint64_t completed_blocks() const { return completed_; }

    // Counts one processed symbol. Returns true when a block boundary was
    // crossed and the code was rebuilt.
    bool step(uint32_t symbol) {
        if (position_ >= params_.n)
            throw UsageError("CoderState: stream already complete");
        freq_.record(symbol);
        ++position_;
        if (--until_boundary_ == 0) {
            until_boundary_ = params_.block_size;
            ++completed_;
            if (position_ < params_.n) {
                rebuild_code();
                return true;
            }
        }
        return false;
    }

    // Rebuilds the block code from the current counts. Only valid exactly at
    // a block boundary with input remaining.
    void rebuild_code();

private:
    AlphabetParams params_;
    CodingMode mode_;
    FrequencyTable freq_;
    PrefixCode code_;
    uint64_t position_ = 0;
    uint64_t completed_ = 0;
    uint64_t until_boundary_ = 0;
};

// Encodes the whole input, invoking on_codeword(symbol, codeword) for every
// emitted codeword. The payload is the concatenation of codewords under the
// code in force at each position, MSB-first, zero-padded to a byte at the
// end of the stream only.
template <std::unsigned_integral Sym, typename OnCodeword>
Payload encode_stream(std::span<const Sym> input, uint32_t sigma,
                      CodingMode mode, OnCodeword&& on_codeword) {
    const AlphabetParams params = derive_params(sigma, input.size());
    CoderState state(params, mode);
    BitWriter out;
    out.reserve_bits(input.size() * ceil_log2(sigma));
    for (const Sym raw : input) {
        const uint32_t symbol = static_cast<uint32_t>(raw);
        if (symbol >= sigma)
            throw UsageError("encode_stream: symbol out of range");
        const Codeword w = state.code()[symbol];
        out.write_bits(w.bits, w.length);
        on_codeword(symbol, w);
        state.step(symbol);
    }
    return out.finish();
}

template <std::unsigned_integral Sym>
Payload encode_stream(std::span<const Sym> input, uint32_t sigma,
                      CodingMode mode) {
    return encode_stream(input, sigma, mode, [](uint32_t, const Codeword&) {});
}

// Mirrors the encoder's state machine: fixed-width reads for the first
// block, then one table lookup and advance per symbol, with the table
// rebuilt at each block boundary from the identical frequency state. Stops
// after n symbols.
template <std::unsigned_integral Sym>
std::vector<Sym> decode_stream(BitReader& source, uint32_t sigma, uint64_t n,
                               CodingMode mode) {
    const AlphabetParams params = derive_params(sigma, n);
    if (uint64_t{sigma} - 1 > std::numeric_limits<Sym>::max())
        throw UsageError("decode_stream: symbol type too narrow for sigma");

    const unsigned first_width = ceil_log2(sigma);
    const unsigned window_width = decode_window_width(params, mode);
    CoderState state(params, mode);
    std::optional<DecodeTable> table;

    std::vector<Sym> output;
    output.reserve(n);
    for (uint64_t j = 0; j < n; ++j) {
        uint32_t symbol;
        if (!table) {
            const uint64_t value = source.peek_bits(first_width);
            source.advance(first_width);
            if (value >= sigma)
                throw CorruptStreamError("fixed-width value outside the alphabet");
            symbol = static_cast<uint32_t>(value);
        } else {
            const DecodeTable::Entry entry =
                table->lookup(source.peek_bits(window_width));
            source.advance(entry.length);
            symbol = entry.symbol;
        }
        output.push_back(static_cast<Sym>(symbol));
        if (state.step(symbol))
            table.emplace(state.code(), window_width);
    }
    return output;
}

} // namespace apfc
