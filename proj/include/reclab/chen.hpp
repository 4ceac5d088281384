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

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "reclab/window.hpp"

namespace reclab {

// (ln n)^2 when n is prime, n + 2 is a prime or a product of two primes, and
// every prime factor of n(n+2) is at least n^{1/10}; else 0.
double theta(u64 n);

struct ChenSum {
    u64 N = 0;
    double sum = 0;
    double ratio = 0;  // sum / N
    u64 support = 0;   // n <= N with theta(n) > 0
};

ChenSum chen_sum(u64 N);

// W = product of the primes below w; theta_{W,b}(n) = (phi(W)/W)^2 theta(Wn + b).
struct ChenWeights {
    u64 w = 0;
    u64 W = 1;
    u64 phi_W = 1;
    i64 b = -1;
    std::vector<double> values;  // theta_{W,b}(n) for n = 1..n_max

    ChenWeights(u64 w, i64 b, u64 n_max);
    double at(u64 n) const;  // direct recomputation, no cache
};

using Complex = std::complex<double>;

struct GowersResult {
    double norm = 0;
    double raw = 0;        // E_x E_h prod C^{|w|} f(x + w.h), real part
    bool clamped = false;  // raw was negative within 1e-12 and set to 0
};

// ||f||_{U^k(Z_N)} by full enumeration, k in {1, 2, 3}, N^{k+1} <= 10^9.
GowersResult gowers_norm(const std::vector<Complex>& f, int k);

// "constant:c", "indicator:primes", "indicator:chen", "theta:w" (theta_{W,-1}),
// or two-column text (n value) read by load_function_text.
std::vector<Complex> named_function(const std::string& spec, u64 N);
std::vector<Complex> load_function_text(const std::string& text, u64 N);

struct RecurrenceHit {
    u64 a = 0;
    u64 p = 0;
    std::vector<u64> terms;  // a + j(p+1), j = 0..k
};

// Least (p, a), p an odd Chen prime, with a + j(p+1) in A for j = 0..k.
// A must consist of primes; k in {1, 2}.
std::optional<RecurrenceHit> recurrence_search(const Window& A, unsigned k);

}  // namespace reclab
