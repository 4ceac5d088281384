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
#include "reclab/bohr.hpp"
#include "reclab/errors.hpp"

using namespace reclab;

TEST_CASE("polynomial root counts") {
    CHECK(poly_root_count({1, 0, 1}, 5) == 2);
    CHECK(poly_root_count({1, 0, 1}, 7) == 0);
    CHECK(poly_root_count({1, 0, 1}, 2) == 1);
}

TEST_CASE("quadratic form blocked classes") {
    const QuadraticForm f{1, 0, 1};
    const auto b3 = blocked_for_quadratic_form(f, 3);
    REQUIRE(b3);
    CHECK(b3->c == 9);
    CHECK(b3->blocked == std::vector<u64>{3, 6});
    CHECK_FALSE(blocked_for_quadratic_form(f, 5));
    CHECK_THROWS(blocked_for_quadratic_form(f, 2));
    CHECK_THROWS(blocked_for_quadratic_form(f, 9));
    CHECK_THROWS(blocked_for_quadratic_form(QuadraticForm{1, 2, 1}, 3));  // D = 0 is a square
}

TEST_CASE("haar bound and coprimality") {
    const BlockedModulus a{3, {0}, {3}, ""}, b{5, {0}, {5}, ""}, c{9, {3, 6}, {}, ""};
    CHECK(haar_upper_bound({a, b}) == Rational(8, 15));
    CHECK_THROWS(haar_upper_bound({a, c}));
}

TEST_CASE("primes pipeline equals the Mertens product") {
    const BohrReport r = bohr_pipeline(BohrTarget::parse("primes"), 100);
    Rational want = 1;
    for (u64 p : primes_up_to(100)) want *= 1 - Rational(1, p);
    CHECK(r.final_bound == want);
    CHECK(r.moduli.size() == 25);
    for (std::size_t i = 1; i < r.trail.size(); ++i) CHECK(r.trail[i] < r.trail[i - 1]);
}

TEST_CASE("sum of two squares moduli validate exhaustively") {
    const BohrReport r = bohr_pipeline(BohrTarget::parse("qform:1,0,1"), 50);
    std::vector<u64> c;
    for (const auto& m : r.moduli) c.push_back(m.c);
    CHECK(c == std::vector<u64>{9, 49, 121, 361, 529, 961, 1849, 2209});
    const auto values = quadratic_form_values({1, 0, 1}, 1'000'000, 1001);
    for (const auto& m : r.moduli) CHECK_NOTHROW(validate_blocked(m, values));
}

TEST_CASE("validate_blocked rejects a stray member") {
    const BlockedModulus bm{9, {3, 6}, {}, ""};
    CHECK_THROWS_AS(validate_blocked(bm, {1, 2, 4, 5, 12}), VerificationError);
    CHECK_NOTHROW(validate_blocked(bm, {1, 2, 4, 5, 9}));
}

TEST_CASE("cubic norm form") {
    const auto v = cubic_norm_values(4);
    CHECK(std::find(v.begin(), v.end(), 1) != v.end());
    CHECK(std::find(v.begin(), v.end(), 2) != v.end());
    // N(1, 0, 1) = 1 + 4 - 0 = 5: the prime 5 is represented, so 5 is not inert
    CHECK(std::find(v.begin(), v.end(), 5) != v.end());
    const InertTest t5 = empirical_inert_test(cubic_norm_values(30), 5);
    CHECK_FALSE(t5.inert_like);
    REQUIRE(t5.counterexample);
    CHECK(*t5.counterexample % 25 != 0);
    CHECK(empirical_inert_test(cubic_norm_values(30), 7).inert_like);
    const BohrReport r = bohr_pipeline(BohrTarget::parse("norm:cubic2"), 20);
    std::vector<u64> c;
    for (const auto& m : r.moduli) c.push_back(m.c);
    CHECK(c == std::vector<u64>{49, 169, 361});
}

TEST_CASE("polynomial pipeline") {
    const BohrReport r = bohr_pipeline(BohrTarget::parse("poly:1,0,1"), 50);
    CHECK(r.moduli.size() == 8);  // primes 3 mod 4 below 50
    CHECK(r.moduli.front().c == 3);
}
