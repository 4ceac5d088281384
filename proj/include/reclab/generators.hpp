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
#include <string>
#include <vector>

#include "reclab/arith.hpp"
#include "reclab/window.hpp"

namespace reclab {

enum class FamilyKind {
    Primes,
    ChenPrimes,
    ChenPrimesStrict,
    BoundedGapPrimes,
    PolynomialImage,
    DigitBalanced,
    SumsOfTwoSquares,
    Explicit,
};

// A named infinite (or explicit finite) set of positive integers.
struct SetFamily {
    FamilyKind kind = FamilyKind::Primes;
    u64 h = 0;                  // BoundedGapPrimes
    std::vector<i64> coeffs;    // PolynomialImage, highest degree first
    std::vector<u64> values;    // Explicit, strictly increasing

    static SetFamily primes() { return {}; }
    static SetFamily chen(bool strict);
    static SetFamily bounded_gap(u64 h);
    static SetFamily polynomial(std::vector<i64> coeffs);
    static SetFamily digit_balanced();
    static SetFamily sums_of_two_squares();
    static SetFamily explicit_set(std::vector<u64> values);

    // "primes", "chen", "chen-strict", "bounded-gap:2", "poly:1,0,0",
    // "digit-balanced", "sums-of-two-squares", "explicit:1,2,3", "naturals".
    static SetFamily parse(const std::string& name);
    std::string name() const;
};

bool membership(const SetFamily& family, u64 n);

// p prime required. Non-strict: p+2 prime or a product of exactly two primes.
// Strict additionally needs q^10 >= p for the smallest prime factor q of a
// semiprime p+2.
bool is_chen(u64 p, bool strict);

// Members in [lo, hi], computed by the family's enumerator (sieves and
// direct generation), not by calling membership().
Window family_window(const SetFamily& family, u64 lo, u64 hi);
std::vector<u64> enumerate(const SetFamily& family, u64 hi);

struct CountingProfile {
    std::vector<u64> x_values;
    std::vector<u64> E_of_x;
    std::map<u64, std::vector<u64>> E_m_of_x;
    std::map<u64, Rational> c_m_estimates;
};

// Exact E(x) and E_m(x) at each x in x_values (default: powers of ten below
// x_max, then x_max).
CountingProfile count_profile(const SetFamily& family, u64 x_max, const std::vector<u64>& shifts,
                              std::vector<u64> x_values = {});

// |{n in [1, n_max] : n has as many 0s as 1s in binary}|, by brute force.
u64 digit_balanced_count(u64 n_max);

// Polynomial value at x, coefficients highest degree first.
BigInt poly_eval(const std::vector<i64>& coeffs, const BigInt& x);

}  // namespace reclab
