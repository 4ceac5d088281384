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
#include "reclab/errors.hpp"
#include "reclab/generators.hpp"
#include "reclab/kernels.hpp"
#include "reclab/sparse_difference.hpp"

using namespace reclab;

namespace {

u64 brute_r_hits(const Window& A, const std::vector<kernels::Interval>& R) {
    const auto m = A.members();
    u64 hits = 0;
    for (const auto& iv : R)
        for (u64 d = iv.lo; d <= iv.hi; ++d)
            for (u64 a : m) hits += A.contains(a + d);
    return hits;
}

}  // namespace

TEST_CASE("thick intervals") {
    const auto I = thick_intervals({GrowthFn::parse("table:100,10000,100000000"), 3});
    REQUIRE(I.size() == 3);
    CHECK(I[0] == kernels::Interval{99, 100});
    CHECK(I[1] == kernels::Interval{9998, 10000});
    CHECK_THROWS_AS(thick_intervals({GrowthFn::parse("pow:1"), 3}), GrowthTooSlow);
}

TEST_CASE("primes with a fixed table g") {
    const ThickSpec spec{GrowthFn::parse("table:100,10000,100000000"), 3};
    const SparseDiffResult r =
        build_sparse_difference(SetFamily::primes(), GrowthFn::parse("pow:2"), spec, 100'000);
    CHECK_FALSE(r.C.contains(13));  // 113 is prime
    CHECK(r.C.contains(11));        // 110 and 111 are composite
    CHECK(r.r_hits == 0);
    CHECK(brute_r_hits(r.A, r.R) == 0);
}

TEST_CASE("property: construction invariants") {
    for (const char* g : {"table:30,900,27000", "table:64,4096,262144", "exp:10"}) {
        for (const char* fam : {"primes", "poly:1,0,1", "chen"}) {
            CAPTURE(g);
            CAPTURE(fam);
            const SetFamily E = SetFamily::parse(fam);
            SparseDiffResult r;
            try {
                r = build_sparse_difference(E, GrowthFn::parse("pow:2"), {GrowthFn::parse(g), 5}, 200'000);
            } catch (const GrowthTooSlow&) {
                CHECK(std::string(fam) != "primes");  // primes are dense enough for every g here
                continue;
            }
            CHECK(r.A.subset_of(r.C));
            CHECK(r.C.subset_of(r.E));
            CHECK(r.B.subset_of(r.E));
            CHECK(r.A == set_minus(r.C, r.B));
            CHECK(r.A.count() == r.C.count() - (r.C & r.B).count());
            CHECK(r.E == family_window(E, 1, 200'000));
            CHECK(r.r_hits == 0);
            CHECK(count_r_hits(r.A, r.R) == 0);
        }
    }
}

TEST_CASE("syndetic E degenerates") {
    std::vector<u64> evens;
    for (u64 n = 2; n <= 20'000; n += 2) evens.push_back(n);
    const SetFamily E = SetFamily::explicit_set(evens);
    const SparseDiffResult r =
        build_sparse_difference(E, GrowthFn::parse("pow:2"), {GrowthFn::parse("table:10,100,1000"), 3}, 20'000);
    CHECK(r.A.count() < 10);
    CHECK_THROWS_AS(auto_tune_growth(E, GrowthFn::parse("pow:2"), 20'000), SearchFailed);
}

TEST_CASE("epsilon variant restricts the target to R ∩ T") {
    SparseDiffOptions opt;
    opt.allowed_offsets = Window(1, 100'000);
    for (u64 m = 2; m <= 100'000; m += 2) opt.allowed_offsets->insert(m);
    const ThickSpec spec{GrowthFn::parse("table:100,10000"), 2};
    const auto full = build_sparse_difference(SetFamily::primes(), GrowthFn::parse("pow:2"), spec, 100'000);
    const auto eps = build_sparse_difference(SetFamily::primes(), GrowthFn::parse("pow:2"), spec, 100'000, opt);
    CHECK(eps.A.count() >= full.A.count());
    CHECK(count_r_hits(eps.A, eps.R, &*opt.allowed_offsets) == 0);
}

TEST_CASE("auto tune on squares with f = x^3") {
    const TuneResult t = auto_tune_growth(SetFamily::polynomial({1, 0, 0}), GrowthFn::parse("pow:3"), 10'000'000);
    CHECK(t.result.r_hits == 0);
    CHECK(t.result.density_A_in_E >= Rational(9, 10));
    CHECK(t.ladder.back().status == "ok");
}

TEST_CASE("selberg fixtures") {
    const SelbergReport s = selberg_check(100'000, 100);
    CHECK(s.E_x == 9592);
    CHECK(s.argmax_m == 30);
    CHECK(s.E_m[29] == 3329);
    const SelbergReport one = selberg_check(100'000, 1);
    CHECK(one.max_ratio == Rational(1, 9592));
    CHECK(selberg_check(20, 2).max_ratio == Rational(1, 2));
}

TEST_CASE("digit battery") {
    const DigitBattery b = digit_counterexample_battery(10, 4);
    CHECK(b.size_E == 4);
    CHECK(b.counts[0] == 1);
    CHECK(b.counts[6] == 1);
    CHECK_THROWS_AS(digit_counterexample_battery(0, 4), DomainError);
}

TEST_CASE("c_m scan fixtures") {
    CHECK(c_m_syndeticity_scan(SetFamily::primes(), Rational(1, 2), 100'000, 100).level_set.empty());
    CHECK(c_m_syndeticity_scan(SetFamily::primes(), Rational(1), 100'000, 100).level_set.empty());
    const CmScan d = c_m_syndeticity_scan(SetFamily::digit_balanced(), Rational(1, 1000), 1 << 20, 200);
    REQUIRE(d.max_gap.has_value());
    CHECK(*d.max_gap <= 8);
}
