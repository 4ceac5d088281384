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

#include "reclab/hamming.hpp"

#include <bit>

#include "reclab/errors.hpp"

namespace reclab {

unsigned weight(u64 x) { return static_cast<unsigned>(std::popcount(x)); }

std::vector<u64> hamming_ball(const HammingSpace& space, unsigned k, u64 center) {
    if (space.d == 0 || space.d > 24) throw DomainError("dimension must lie in [1, 24]");
    if (k > space.d) throw DomainError("radius exceeds the dimension");
    if (center > space.all_ones()) throw DomainError("center outside the space");
    std::vector<u64> out;
    for (u64 x = 0; x <= space.all_ones(); ++x)
        if (weight(x ^ center) <= k) out.push_back(x);
    return out;
}

}  // namespace reclab
