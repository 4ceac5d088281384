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

#include <vector>

#include "reclab/arith.hpp"

namespace reclab {

// F_2^d with vectors as d-bit masks, 1 <= d <= 24.
struct HammingSpace {
    unsigned d;

    u64 all_ones() const { return (u64{1} << d) - 1; }
};

unsigned weight(u64 x);

// H_k(center) = {x : weight(x XOR center) <= k}, ascending.
std::vector<u64> hamming_ball(const HammingSpace& space, unsigned k, u64 center);

}  // namespace reclab
