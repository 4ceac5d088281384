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

// Data-parallel inner loops. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel; both produce
// bit-identical results. The dispatching entry points in kernels:: pick the
// serial path when thread_cap() == 1.

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "reclab/window.hpp"

namespace reclab::kernels {

struct Interval {
    u64 lo;
    u64 hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Exclusion rule for the C-sieve: members s >= s_min must have no member in
// s + [m_lo, m_hi]. When an allowed-offset window is given, only offsets in
// it are tested.
struct SieveRule {
    u64 s_min;
    u64 m_lo;
    u64 m_hi;
};

struct CSieveResult {
    Window kept;         // C
    Window provisional;  // members of C whose test interval leaves the window
};

using Complex = std::complex<double>;

namespace serial {
Window sieve_primes(u64 hi);
Window difference_bits(const Window& a, const Window& b, u64 cap);
std::vector<u64> shifted_overlaps(const Window& a, const Window& b, std::span<const u64> shifts);
Complex gowers_sum(std::span<const Complex> f, int k);
std::vector<std::pair<u64, u64>> conflict_edges(const Window& e, std::span<const Interval> r);
CSieveResult c_sieve(const Window& e, std::span<const SieveRule> rules, const Window* allowed_offsets);
}  // namespace serial

namespace parallel {
Window sieve_primes(u64 hi);
Window difference_bits(const Window& a, const Window& b, u64 cap);
std::vector<u64> shifted_overlaps(const Window& a, const Window& b, std::span<const u64> shifts);
Complex gowers_sum(std::span<const Complex> f, int k);
std::vector<std::pair<u64, u64>> conflict_edges(const Window& e, std::span<const Interval> r);
CSieveResult c_sieve(const Window& e, std::span<const SieveRule> rules, const Window* allowed_offsets);
}  // namespace parallel

// Primality bits over [0, hi].
Window sieve_primes(u64 hi);
// Positive differences x - y in [1, cap] (x in a, y in b) as a window over [1, cap].
Window difference_bits(const Window& a, const Window& b, u64 cap);
std::vector<u64> shifted_overlaps(const Window& a, const Window& b, std::span<const u64> shifts);
// Sum over x, h in Z_N^k of prod_omega C^{|omega|} f(x + omega.h), unnormalised.
Complex gowers_sum(std::span<const Complex> f, int k);
// Pairs (a, b), a > b, both members, a - b in some interval; sorted by (a, b).
std::vector<std::pair<u64, u64>> conflict_edges(const Window& e, std::span<const Interval> r);
CSieveResult c_sieve(const Window& e, std::span<const SieveRule> rules,
                     const Window* allowed_offsets = nullptr);

}  // namespace reclab::kernels
