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

#include <optional>
#include <vector>

#include "reclab/arith.hpp"

namespace reclab {

// (B, m) witnesses delta-non-intersectivity of S on the frame [frame_lo, m]:
// |B| > delta*m, B and B+S disjoint, B+S and B+S+S inside the frame.
// The usual frame is [1, m]; the assembly works on [0, m].
struct Witness {
    std::vector<u64> B;  // ascending
    u64 m = 0;
    Rational delta;
    u64 frame_lo = 1;
};

inline constexpr u64 kExactWitnessLimit = 60;

struct WitnessSearchResult {
    std::optional<Witness> witness;
    std::vector<u64> best;  // largest B found (the maximum when exact)
    bool exact = false;
};

// Maximum independent set of the conflict graph on [frame_lo, m - 2 max S]
// (x ~ y iff |x - y| in S). Exact branch and bound for m <= 60, a descending
// greedy pass beyond. Among maximum sets the search keeps the first one met
// when elements are tried from the top down.
WitnessSearchResult witness_search(const std::vector<u64>& S, u64 m, const Rational& delta, u64 frame_lo = 1);

// Independent four-constraint checker (separate translation unit, no shared
// helpers with the search).
bool verify_witness(const std::vector<u64>& S, const Witness& w);

// S/m = {n : m*n in S}.
std::vector<i64> scale_witness(const std::vector<i64>& S, i64 m_divisor);

}  // namespace reclab
