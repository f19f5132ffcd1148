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
#include <vector>

#include "apfc/codebuilder.hpp"
#include "apfc/errors.hpp"

namespace apfc {

// Dense lookup table over all width-bit windows. Each window whose bit
// string starts with some codeword maps to that codeword's symbol and
// length; every other window is an explicit invalid slot so corrupt streams
// are detected instead of silently mis-decoded. Immutable after build.
class DecodeTable {
public:
    struct Entry {
        uint32_t symbol = 0;
        uint8_t length = 0; // 0 marks an unreachable window
    };

    DecodeTable(const PrefixCode& code, unsigned width);

    // Slot contents for a width-bit window. An invalid slot means the window
    // does not begin with any codeword.
    Entry lookup(uint64_t window) const {
        const Entry e = slots_[window];
        if (e.length == 0)
            throw CorruptStreamError("decode window matches no codeword");
        return e;
    }

    bool valid(uint64_t window) const noexcept {
        return slots_[window].length != 0;
    }

    unsigned width() const { return width_; }
    uint64_t slot_count() const { return slots_.size(); }

private:
    std::vector<Entry> slots_;
    unsigned width_ = 0;
};

} // namespace apfc
