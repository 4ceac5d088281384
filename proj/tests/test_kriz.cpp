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
#include "reclab/kriz.hpp"
#include "reclab/witness.hpp"

#include <set>

using namespace reclab;

namespace {

// Largest B on [1, m - 2 max S] with B ∩ (B + S) empty, by subset enumeration.
std::size_t brute_max_witness(const std::vector<u64>& S, u64 m) {
    const u64 smax = *std::max_element(S.begin(), S.end());
    if (m <= 2 * smax) return 0;
    const u64 top = m - 2 * smax;
    std::size_t best = 0;
    for (u64 mask = 0; mask < (u64{1} << top); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) <= best) continue;
        bool ok = true;
        for (u64 s : S)
            if (s < 64 && (mask & (mask << s))) ok = false;
        if (ok) best = std::popcount(mask);
    }
    return best;
}

}  // namespace

TEST_CASE("kneser fixtures") {
    CHECK(kneser_bound_check(4, 1).chromatic.chi == 16);
    CHECK(kneser_bound_check(5, 1).chromatic.chi == 16);
    const auto r = kneser_bound_check(5, 1);
    CHECK(r.chromatic.exact);
    CHECK(r.pass);
    CHECK(r.bound == 3);
    CHECK(kneser_bound_check(3, 2).degenerate);
    CHECK_THROWS_AS(kneser_bound_check(0, 1), DomainError);
    CHECK_THROWS_AS(kneser_bound_check(15, 1), BudgetError);
}

TEST_CASE("witness fixtures") {
    const auto w = witness_search({1}, 10, Rational(7, 20));
    REQUIRE(w.witness);
    CHECK(w.witness->B == std::vector<u64>{2, 4, 6, 8});
    CHECK(w.exact);
    CHECK(verify_witness({1}, *w.witness));
    CHECK_FALSE(witness_search({1}, 10, Rational(9, 20)).witness);
    CHECK_FALSE(verify_witness({1}, Witness{{2, 3}, 10, Rational(1, 10), 1}));
    CHECK_FALSE(verify_witness({1}, Witness{{2, 4, 6, 8, 10}, 10, Rational(1, 10), 1}));
    CHECK(scale_witness({6, 9, 12, 7}, 3) == std::vector<i64>{2, 3, 4});
}

TEST_CASE("property: exact witness size matches enumeration") {
    for (u64 mask = 1; mask < 32; ++mask) {
        std::vector<u64> S;
        for (u64 s = 1; s <= 5; ++s)
            if (mask >> (s - 1) & 1) S.push_back(s);
        if (S.size() > 3) continue;
        for (u64 m = 1; m <= 20; ++m) {
            const auto r = witness_search(S, m, Rational(0));
            CHECK(r.exact);
            CHECK(r.best.size() == brute_max_witness(S, m));
            if (r.witness) CHECK(verify_witness(S, *r.witness));
        }
    }
}

TEST_CASE("htilde") {
    const RationalTorusPoint half = RationalTorusPoint::parse("1/2");
    CHECK(htilde(half, 0, Rational(1, 8), 1, 10) == std::vector<i64>{1, 3, 5, 7, 9});
    CHECK(htilde(half, 1, Rational(1, 8), 1, 6) == std::vector<i64>{1, 2, 3, 4, 5, 6});
    const RationalTorusPoint two = RationalTorusPoint::parse("1/2,1/4");
    // n = 2: (0, 1/2), one coordinate near 0
    CHECK(htilde(two, 1, Rational(1, 8), 1, 8) == std::vector<i64>{2, 6});
    CHECK(htilde(two, 2, Rational(1, 8), 1, 8) == std::vector<i64>{2, 4, 6, 8});
    CHECK_THROWS(RationalTorusPoint::parse("3/2"));
    CHECK_THROWS(htilde(half, 0, Rational(1, 2), 1, 10));
}

TEST_CASE("concatenation produces a verified witness") {
    const auto w1 = witness_search({1}, 10, Rational(7, 20)).witness;
    const auto w2 = witness_search({1}, 10, Rational(7, 20)).witness;
    REQUIRE(w1);
    const ConcatResult c = concat_witness({1}, *w1, {1}, *w2, 8);
    REQUIRE(c.witness);
    CHECK(verify_witness(c.target, *c.witness));
    CHECK(Rational(c.size) > c.needed);
    CHECK_THROWS(concat_witness({1}, *w1, {1}, *w2, 1));
}

TEST_CASE("chromatic certificate") {
    const auto yes = chromatic_intersectivity_certificate(SetFamily::parse("naturals"), {1, 2}, 2, 1, 30);
    CHECK(yes.certified);
    CHECK(yes.chromatic.lower_bound == 3);
    const auto no = chromatic_intersectivity_certificate(SetFamily::parse("naturals"), {1, 3}, 2, 1, 30);
    CHECK_FALSE(no.certified);
    CHECK(no.verdict == "inconclusive on window");
}

TEST_CASE("two-round assembly") {
    const AssemblyResult a = assemble_separation(SetFamily::parse("naturals"), Rational(1, 4), 2);
    REQUIRE(a.completed);
    REQUIRE(a.rounds.size() == 2);
    for (const AssemblyRound& r : a.rounds) {
        CHECK(r.cond_i);
        CHECK(r.cond_ii);
        CHECK(r.cond_iii);
        CHECK(r.chi_lower >= r.k + 1);
        std::set<u64> S(r.S.begin(), r.S.end());
        for (u64 x : r.C)
            for (u64 y : r.C)
                if (x > y) CHECK_FALSE(S.count(x - y));
    }
    CHECK(a.rounds[1].S == std::vector<u64>{1, 2, 8});
    CHECK(a.rounds[1].m == 86);
    CHECK(a.rounds[1].C.size() == 22);
    CHECK(a.transcript.size() >= 5);
    CHECK_THROWS(assemble_separation(SetFamily::parse("naturals"), Rational(1, 2), 2));
}
