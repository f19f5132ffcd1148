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

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "apfc/errors.hpp"

namespace apfc {

// A finished bit sequence: bytes_ holds ceil(bit_count/8) bytes, bits are
// packed MSB-first within each byte, trailing pad bits are zero.
struct Payload {
    std::vector<uint8_t> bytes;
    uint64_t bit_count = 0;
};

// Appends bit fields MSB-first. The buffer always holds exactly
// ceil(bit_count/8) bytes, with the pad bits of the last byte zero.
class BitWriter {
public:
    BitWriter() = default;

    void reserve_bits(uint64_t nbits) { buffer_.reserve((nbits + 7) / 8); }

    // Appends the `width` low-order bits of `value`, most significant first.
    // width must be <= 64 and value must fit in `width` bits.
    void write_bits(uint64_t value, unsigned width) {
        if (width > 64)
            throw UsageError("write_bits: width exceeds 64");
        if (width < 64 && (value >> width) != 0)
            throw UsageError("write_bits: value wider than the requested field");
        unsigned left = width;
        while (left > 0) {
            const unsigned offset = static_cast<unsigned>(bit_count_ & 7);
            if (offset == 0)
                buffer_.push_back(0);
            const unsigned take = std::min(8 - offset, left);
            const uint8_t chunk =
                static_cast<uint8_t>((value >> (left - take)) & ((1u << take) - 1u));
            buffer_.back() |= static_cast<uint8_t>(chunk << (8 - offset - take));
            bit_count_ += take;
            left -= take;
        }
    }

    uint64_t bit_count() const { return bit_count_; }

    std::span<const uint8_t> bytes() const { return buffer_; }

    // Moves the accumulated bits out and resets the writer.
    Payload finish() {
        Payload out{std::move(buffer_), bit_count_};
        buffer_.clear();
        bit_count_ = 0;
        return out;
    }

private:
    std::vector<uint8_t> buffer_;
    uint64_t bit_count_ = 0;
};

// Reads bit fields MSB-first from a byte buffer, bounded by a bit limit that
// may be shorter than the buffer. Peeking past the limit zero-fills (the
// decoder always views fixed-width windows and stops by symbol count);
// advancing past the limit is an error.
class BitReader {
public:
    BitReader(std::span<const uint8_t> bytes, uint64_t limit_bits)
        : data_(bytes), limit_(limit_bits) {
        if (limit_bits > bytes.size() * 8ull)
            throw UsageError("BitReader: bit limit exceeds the buffer");
    }

    // Next `width` bits as an integer, MSB of the window first. Bits past the
    // limit read as zero. Never moves the cursor.
    uint64_t peek_bits(unsigned width) const {
        if (width > 64)
            throw UsageError("peek_bits: width exceeds 64");
        uint64_t out = 0;
        uint64_t pos = cursor_;
        unsigned need = width;
        while (need > 0 && pos < limit_) {
            const unsigned offset = static_cast<unsigned>(pos & 7);
            unsigned take = std::min(8 - offset, need);
            if (limit_ - pos < take)
                take = static_cast<unsigned>(limit_ - pos);
            const uint8_t chunk = static_cast<uint8_t>(
                (data_[pos >> 3] >> (8 - offset - take)) & ((1u << take) - 1u));
            out = (out << take) | chunk;
            pos += take;
            need -= take;
        }
        return out << need; // zero-fill the missing low-order bits
    }

    void advance(unsigned width) {
        if (width > 64)
            throw UsageError("advance: width exceeds 64");
        if (limit_ - cursor_ < width)
            throw CorruptStreamError("bit source exhausted");
        cursor_ += width;
    }

    uint64_t read_bits(unsigned width) {
        const uint64_t value = peek_bits(width);
        advance(width);
        return value;
    }

    uint64_t cursor() const { return cursor_; }
    uint64_t limit() const { return limit_; }
    uint64_t remaining() const { return limit_ - cursor_; }

private:
    std::span<const uint8_t> data_;
    uint64_t cursor_ = 0;
    uint64_t limit_ = 0;
};

} // namespace apfc
