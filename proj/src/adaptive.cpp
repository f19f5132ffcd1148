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

#include "apfc/adaptive.hpp"

#include <algorithm>

namespace apfc {

PrefixCode build_block_code(const SmoothedDistribution& dist, CodingMode mode) {
    if (mode == CodingMode::alphabetic)
        return gilbert_moore_code(dist);
    return canonical_assign(shannon_lengths(dist));
}

unsigned decode_window_width(const AlphabetParams& params, CodingMode mode) {
    unsigned width = ceil_log2(uint64_t{params.sigma} * params.log_n);
    if (mode == CodingMode::alphabetic)
        ++width;
    return std::max(width, ceil_log2(params.sigma));
}

CoderState::CoderState(const AlphabetParams& params, CodingMode mode)
    : params_(params),
      mode_(mode),
      freq_(params.sigma),
      code_(fixed_length_code(params.sigma)),
      until_boundary_(params.block_size) {}

void CoderState::rebuild_code() {
    if (position_ == 0 || position_ % params_.block_size != 0)
        throw UsageError("rebuild_code: not at a block boundary");
    if (position_ >= params_.n)
        throw UsageError("rebuild_code: no input remains");
    const uint64_t k = position_ / params_.block_size;
    code_ = build_block_code(smoothed_distribution(freq_, params_, k), mode_);
}

} // namespace apfc
