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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reclab/generators.hpp"
#include "reclab/window.hpp"

namespace reclab {

// Distinct offsets h_1 < ... < h_k, k >= 1.
struct Tuple {
    std::vector<i64> offsets;

    explicit Tuple(std::vector<i64> h);  // sorts; rejects duplicates and empty input
    static Tuple parse(const std::string& text);  // "0,2,6,8"
    std::size_t size() const { return offsets.size(); }
};

// No prime p <= |H| sees every residue class.
bool is_admissible(const Tuple& H);

// k * prod_{p <= k} (1 - 1/p)^{-1}.
Rational huang_wu_threshold(unsigned k);

// For each prime p <= k, drop the least populated residue class (ties: the
// smallest residue), then keep the k smallest survivors.
Tuple huang_wu_extract(const std::vector<i64>& A, unsigned k);

// All n in [1, n_max] with at least r primes among n + H.
std::vector<u64> translate_search(const Tuple& H, unsigned r, u64 n_max);

struct DeltaStarReport {
    unsigned r = 0;
    u64 probe_span = 0;  // after clipping to the top of the difference window
    bool exhaustive = false;
    u64 explored = 0;  // search nodes (exhaustive) or draws (sampled)
    std::optional<std::vector<u64>> violation;  // S with (S - S) missing the set entirely
    std::string verdict;
};

// Looks for S in [0, probe_span], |S| = r, whose positive differences all
// avoid `diffs`. Exhaustive when C(span+1, r) <= 10^7, else `trials` seeded
// random draws. A violation is definitive; its absence is only evidence.
DeltaStarReport delta_star_certify(const Window& diffs, unsigned r, u64 probe_span, u64 trials, u64 seed);

struct CoverReport {
    std::vector<u64> translates;  // t_1 < ... < t_k
    u64 threshold = 0;            // every n in (threshold, checked_hi] is covered
    u64 checked_hi = 0;
    bool verified = false;
    bool within_bound = false;
    std::string verdict;
};

// Greedy recursion t_1 = 1, t_k the least integer above t_{k-1} outside
// the union of t_i + A, run while the union is fully known (n <= t_1 + max A).
CoverReport syndeticity_index_cover(const Window& A, unsigned r_bound);

struct PigeonholeHit {
    u64 n = 0;
    i64 h_low = 0, h_high = 0;
    u64 low = 0, high = 0;  // the two same-coloured members n + h
    unsigned color = 0;
    i64 difference = 0;
    bool in_H_minus_H = false;
};

struct PigeonholeReport {
    unsigned colors = 0;
    std::vector<u64> translates;  // n with at least colors + 1 members of E in n + H
    std::vector<PigeonholeHit> hits;
};

// Colours run over 1..r with r the largest colour used. Every member of E in
// [1, n_max + max H] must be coloured.
PigeonholeReport partition_pigeonhole_check(const SetFamily& E, const std::map<u64, unsigned>& coloring,
                                            const Tuple& H, u64 n_max);

// Two-column text "n color" per line; '#' starts a comment.
std::map<u64, unsigned> parse_coloring(const std::string& text);

}  // namespace reclab
