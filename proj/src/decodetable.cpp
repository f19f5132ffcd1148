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

#include "apfc/decodetable.hpp"

namespace apfc {

DecodeTable::DecodeTable(const PrefixCode& code, unsigned width) : width_(width) {
    if (width == 0 || width > 64)
        throw UsageError("DecodeTable: width must be in 1..64");
    if (code.max_length() > width)
        throw UsageError("DecodeTable: codeword longer than the table width");

    slots_.assign(uint64_t{1} << width, Entry{});
    for (uint32_t symbol = 0; symbol < code.sigma(); ++symbol) {
        const Codeword w = code[symbol];
        if (w.length == 0)
            throw UsageError("DecodeTable: zero-length codeword");
        // A codeword of length l prefixes exactly 2^(width-l) windows.
        const uint64_t base = w.bits << (width - w.length);
        const uint64_t span = uint64_t{1} << (width - w.length);
        for (uint64_t i = 0; i < span; ++i) {
            Entry& slot = slots_[base + i];
            if (slot.length != 0)
                throw UsageError("DecodeTable: code is not prefix-free");
            slot = Entry{symbol, w.length};
        }
    }
}

} // namespace apfc
