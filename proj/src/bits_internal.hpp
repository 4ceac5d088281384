// Copyright 2026 The recurrence-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace reclab::detail {

// 64 bits of `words` starting at bit `pos`; bits outside [0, nbits) read as 0.
inline std::uint64_t load64(const std::vector<std::uint64_t>& words, std::int64_t nbits, std::int64_t pos) {
    if (pos >= nbits || pos <= -64) return 0;
    std::uint64_t out;
    if (pos < 0) {
        out = words[0] << (-pos);
    } else {
        const std::int64_t w = pos >> 6;
        const int sh = static_cast<int>(pos & 63);
        out = words[w] >> sh;
        if (sh != 0 && w + 1 < static_cast<std::int64_t>(words.size())) out |= words[w + 1] << (64 - sh);
    }
    const std::int64_t valid = nbits - pos;
    if (valid < 64) out &= (std::uint64_t{1} << valid) - 1;
    return out;
}

inline std::uint64_t popcount_all(const std::vector<std::uint64_t>& words) {
    std::uint64_t c = 0;
    for (std::uint64_t w : words) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

}  // namespace reclab::detail
