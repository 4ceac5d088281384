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
#include <string>
#include <vector>

#include "json.hpp"
#include "reclab/chromatic.hpp"
#include "reclab/generators.hpp"
#include "reclab/hamming.hpp"
#include "reclab/witness.hpp"

namespace reclab {

struct KneserReport {
    unsigned d = 0, k = 0;
    bool degenerate = false;
    std::string note;
    std::size_t generators = 0;
    unsigned bound = 0;  // 2k+1
    ChromaticResult chromatic;
    bool pass = false;  // lower bound (or exact chi) >= 2k+1
};

// chi(Cay(F_2^d, H_{2k+1}(1))) against 2k+1, for 1 <= d <= 14. When d <= 2k+1
// the ball contains 0 and the pair is reported as degenerate.
KneserReport kneser_bound_check(unsigned d, unsigned k, const ChromaticOptions& opt = {2'000'000});

// Point of the torus with exact rational coordinates in [0, 1).
struct RationalTorusPoint {
    std::vector<Rational> coords;

    // Validates range and a common denominator of at most 10^6.
    explicit RationalTorusPoint(std::vector<Rational> c);
    static RationalTorusPoint parse(const std::string& text);  // "1/2,1/3"
};

// {n in [lo, hi] : n*alpha lies within eps of a point of {0, 1/2}^d having at
// most k coordinates equal to 0}. Distances are torus distances, strict.
std::vector<i64> htilde(const RationalTorusPoint& alpha, unsigned k, const Rational& epsilon, i64 lo, i64 hi);

struct ConcatResult {
    std::optional<Witness> witness;  // for S1 united with m*S2
    std::vector<u64> target;         // S1 united with m*S2
    std::size_t seed_size = 0;       // |C0| after deletion repair
    std::size_t size = 0;            // |C| after augmentation
    Rational needed;                 // |C| must exceed this
};

// Block-tiling search for a witness of S1 united with m*S2 on [frame_lo, l*m],
// where (A, m) = w1 and the block pattern comes from w2.
ConcatResult concat_witness(const std::vector<u64>& S1, const Witness& w1, const std::vector<u64>& S2,
                            const Witness& w2, u64 l);

struct CertificateReport {
    std::size_t vertices = 0;
    ChromaticResult chromatic;
    bool certified = false;
    std::string verdict;
};

CertificateReport chromatic_intersectivity_certificate(const SetFamily& E, const std::vector<u64>& S, unsigned k,
                                                       u64 lo, u64 hi, const ChromaticOptions& opt = {});

struct AssemblyOptions {
    u64 s_cap = 12;          // candidate S' drawn from [1, s_cap]
    unsigned max_size = 3;   // |S'| at most this
    u64 window_min = 64;     // chromatic certificate window floor
    u64 l_max = 64;          // concatenation lengths 2..l_max
    u64 chromatic_nodes = 200'000;
};

struct AssemblyRound {
    unsigned k = 0;
    std::vector<u64> S;
    std::vector<u64> C;
    u64 m = 0;
    bool cond_i = false, cond_ii = false, cond_iii = false;
    unsigned chi_lower = 0;  // certified lower bound for chi(Cay(E on window, S))
};

struct AssemblyResult {
    std::vector<AssemblyRound> rounds;
    nlohmann::ordered_json transcript = nlohmann::ordered_json::array();
    bool completed = false;
    std::string failure;
};

// Requires 0 < delta < 1/2 and 1 <= rounds <= 3.
AssemblyResult assemble_separation(const SetFamily& E, const Rational& delta, unsigned rounds,
                                   const AssemblyOptions& opt = {});

}  // namespace reclab
