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

#include "doctest.h"
#include "reclab/generators.hpp"
#include "reclab/kernels.hpp"
#include "reclab/parallel.hpp"

#include <random>

using namespace reclab;

namespace {

Window random_window(u64 seed, u64 lo, u64 hi, double p) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(p);
    Window w(lo, hi);
    for (u64 n = lo; n <= hi; ++n)
        if (keep(rng)) w.insert(n);
    return w;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree bit for bit") {
    for (int threads : {1, 2, 4}) {
        CAPTURE(threads);
        ThreadCapScope cap(threads);
        CHECK(kernels::serial::sieve_primes(3'000'000) == kernels::parallel::sieve_primes(3'000'000));

        const Window a = random_window(1, 5, 300'000, 0.02), b = random_window(2, 1, 310'000, 0.03);
        CHECK(kernels::serial::difference_bits(a, b, 5000) == kernels::parallel::difference_bits(a, b, 5000));

        std::vector<u64> shifts{0, 1, 2, 63, 64, 65, 1000, 299'999};
        CHECK(kernels::serial::shifted_overlaps(a, b, shifts) == kernels::parallel::shifted_overlaps(a, b, shifts));

        std::vector<kernels::Complex> f(13);
        std::mt19937_64 rng(9);
        std::normal_distribution<double> g;
        for (auto& z : f) z = {g(rng), g(rng)};
        for (int k = 1; k <= 3; ++k) {
            const auto s = kernels::serial::gowers_sum(f, k), p = kernels::parallel::gowers_sum(f, k);
            CHECK(s.real() == p.real());
            CHECK(s.imag() == p.imag());
        }

        const Window sq = family_window(SetFamily::polynomial({1, 0, 0}), 1, 2'000'000);
        const std::vector<kernels::Interval> R{{16, 18}, {10000, 10003}, {500, 900}};
        CHECK(kernels::serial::conflict_edges(sq, R) == kernels::parallel::conflict_edges(sq, R));

        const Window e = kernels::serial::sieve_primes(200'000);
        const std::vector<kernels::SieveRule> rules{{10, 4, 6}, {100, 90, 100}};
        const auto cs = kernels::serial::c_sieve(e, rules, nullptr);
        const auto cp = kernels::parallel::c_sieve(e, rules, nullptr);
        CHECK(cs.kept == cp.kept);
        CHECK(cs.provisional == cp.provisional);
    }
}

TEST_CASE("prime sieve oracle") {
    const Window p = kernels::sieve_primes(1'000'000);
    CHECK(p.count() == 78498);
    CHECK(p.contains(999'983));
    CHECK_FALSE(p.contains(1));
}

TEST_CASE("difference bits brute force") {
    const Window a = random_window(4, 0, 600, 0.05);
    const Window d = kernels::difference_bits(a, a, 600);
    const auto m = a.members();
    for (u64 x = 1; x <= 600; ++x) {
        bool hit = false;
        for (u64 s : m) hit = hit || a.contains(s + x);
        CHECK(d.contains(x) == hit);
    }
}

TEST_CASE("conflict edges brute force") {
    const Window sq = family_window(SetFamily::polynomial({1, 0, 0}), 1, 5000);
    const std::vector<kernels::Interval> R{{16, 18}, {100, 140}};
    std::vector<std::pair<u64, u64>> want;
    for (u64 a : sq.members())
        for (u64 b : sq.members())
            if (a > b && ((a - b >= 16 && a - b <= 18) || (a - b >= 100 && a - b <= 140))) want.push_back({a, b});
    std::sort(want.begin(), want.end());
    CHECK(kernels::conflict_edges(sq, R) == want);
}
