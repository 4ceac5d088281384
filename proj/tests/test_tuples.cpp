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
#include "reclab/parallel.hpp"
#include "reclab/tuples.hpp"

#include <random>
#include <set>

using namespace reclab;

namespace {

bool residues_admissible(const std::vector<i64>& h) {
    for (u64 p = 2; p <= h.size(); ++p) {
        if (!is_prime(p)) continue;
        std::set<i64> seen;
        for (i64 x : h) seen.insert(floor_mod(x, static_cast<i64>(p)));
        if (seen.size() == p) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("admissibility fixtures") {
    CHECK(is_admissible(Tuple({0, 2})));
    CHECK_FALSE(is_admissible(Tuple({0, 2, 4})));
    CHECK(is_admissible(Tuple::parse("0,2,6,8,12,18,20,26")));
    CHECK_THROWS(Tuple({1, 1}));
    CHECK_THROWS(Tuple(std::vector<i64>{}));
}

TEST_CASE("property: admissibility agrees with a residue scan") {
    for (u64 mask = 1; mask < (1u << 13); ++mask) {
        if (std::popcount(mask) > 5) continue;
        std::vector<i64> h;
        for (int i = 0; i < 13; ++i)
            if (mask >> i & 1) h.push_back(i);
        CHECK(is_admissible(Tuple(h)) == residues_admissible(h));
    }
}

TEST_CASE("huang wu extraction") {
    std::vector<i64> one_to_twenty(20);
    for (int i = 0; i < 20; ++i) one_to_twenty[i] = i + 1;
    CHECK(huang_wu_extract(one_to_twenty, 3).offsets == std::vector<i64>{1, 5, 7});
    std::vector<i64> evens;
    for (i64 n = 2; n <= 60; n += 2) evens.push_back(n);
    const Tuple e = huang_wu_extract(evens, 5);
    CHECK(e.offsets == std::vector<i64>{2, 4, 8, 14, 16});
    CHECK(is_admissible(e));
    CHECK_THROWS_AS(huang_wu_extract({1, 2, 3}, 3), DomainError);
    CHECK(huang_wu_threshold(3) == Rational(9));
}

TEST_CASE("property: extracted tuples are admissible") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const unsigned k = 1 + rng() % 8;
        const double need = to_double(huang_wu_threshold(k));
        const std::size_t size = static_cast<std::size_t>(std::ceil(need)) + rng() % 20;
        std::set<i64> s;
        while (s.size() < size) s.insert(static_cast<i64>(rng() % 500) - 100);
        const Tuple H = huang_wu_extract(std::vector<i64>(s.begin(), s.end()), k);
        CHECK(H.size() == k);
        CHECK(residues_admissible(H.offsets));
        for (i64 h : H.offsets) CHECK(s.count(h));
    }
}

TEST_CASE("translate search") {
    const auto hits = translate_search(Tuple::parse("0,2,6,8,12,18,20,26"), 8, 100);
    CHECK(std::find(hits.begin(), hits.end(), 11) != hits.end());
    CHECK(translate_search(Tuple({0, 2}), 2, 20) == std::vector<u64>{3, 5, 11, 17});
    CHECK_THROWS_AS(translate_search(Tuple({0, 2}), 3, 20), DomainError);
}

TEST_CASE("serial and parallel translate search agree") {
    const Tuple H = Tuple::parse("0,4,6,10,12");
    ThreadCapScope one(1);
    const auto a = translate_search(H, 4, 2'000'000);
    ThreadCapScope four(4);
    CHECK(translate_search(H, 4, 2'000'000) == a);
}

TEST_CASE("delta star") {
    Window odds(1, 1000), sixes(1, 1000);
    for (u64 n = 1; n <= 1000; n += 2) odds.insert(n);
    for (u64 n = 6; n <= 1000; n += 6) sixes.insert(n);
    const auto a = delta_star_certify(odds, 2, 10, 100, 0);
    REQUIRE(a.violation.has_value());
    CHECK(*a.violation == std::vector<u64>{0, 2});
    const auto b = delta_star_certify(sixes, 2, 5, 100, 0);
    REQUIRE(b.violation.has_value());
    CHECK(*b.violation == std::vector<u64>{0, 1});
    for (unsigned r = 2; r <= 4; ++r) CHECK_FALSE(delta_star_certify(Window::full(1, 20), r, 20, 100, 0).violation);
    const auto sampled = delta_star_certify(sixes, 5, 1000, 500, 7);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.violation.has_value());
    CHECK(sampled.explored <= 500);
    CHECK(delta_star_certify(sixes, 5, 1000, 500, 7).violation == sampled.violation);
}

TEST_CASE("syndeticity index cover") {
    Window evens(1, 200), fives(1, 200);
    for (u64 n = 2; n <= 200; n += 2) evens.insert(n);
    for (u64 n = 5; n <= 200; n += 5) fives.insert(n);
    const CoverReport e = syndeticity_index_cover(evens, 8);
    CHECK(e.translates == std::vector<u64>{1, 2});
    CHECK(e.verified);
    CHECK(syndeticity_index_cover(fives, 8).translates.size() == 5);
    CHECK(syndeticity_index_cover(Window::full(1, 200), 8).translates.size() == 1);
    CHECK_FALSE(syndeticity_index_cover(fives, 3).within_bound);
}

TEST_CASE("partition pigeonhole") {
    const Tuple H = Tuple::parse("0,2,6,8,12,18,20,26");
    std::map<u64, unsigned> parity;
    unsigned i = 0;
    for (u64 p : primes_up_to(200)) parity[p] = (i++ % 2) + 1;
    const PigeonholeReport rep = partition_pigeonhole_check(SetFamily::primes(), parity, H, 100);
    CHECK(rep.colors == 2);
    CHECK(std::find(rep.translates.begin(), rep.translates.end(), 11) != rep.translates.end());
    for (const PigeonholeHit& h : rep.hits) {
        CHECK(parity.at(h.low) == parity.at(h.high));
        CHECK(h.high - h.low == static_cast<u64>(h.difference));
        CHECK(h.in_H_minus_H);
    }
    std::map<u64, unsigned> one;
    for (u64 p : primes_up_to(200)) one[p] = 1;
    CHECK(partition_pigeonhole_check(SetFamily::primes(), one, H, 100).translates.size() >=
          rep.translates.size());
    std::map<u64, unsigned> hole = parity;
    hole.erase(13);
    CHECK_THROWS_AS(partition_pigeonhole_check(SetFamily::primes(), hole, H, 100), DomainError);
    CHECK(parse_coloring("# c\n2 1\n3 2\n") == std::map<u64, unsigned>{{2, 1}, {3, 2}});
}
