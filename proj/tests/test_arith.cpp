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
#include "reclab/arith.hpp"
#include "reclab/errors.hpp"

#include <random>

using namespace reclab;

TEST_CASE("rational round trip") {
    CHECK(to_string(parse_rational("6/8")) == "3/4");
    CHECK(to_string(parse_rational("0.35")) == "7/20");
    CHECK(to_string(parse_rational("5")) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("primality oracle") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(1'000'000'007));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(18446744073709551557ull));
    CHECK(primes_up_to(100).size() == 25);
    CHECK(primes_up_to(100000).size() == 9592);
}

TEST_CASE("factorization") {
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<u64, int>{2, 3});
    CHECK(f[2] == std::pair<u64, int>{5, 1});
    CHECK(big_omega(360) == 6);
    CHECK(smallest_prime_factor(91) == 7);
    CHECK(isqrt(99) == 9);
    CHECK(is_square(1 << 20));
}

TEST_CASE("property: factorization multiplies back") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const u64 n = 2 + rng() % 10'000'000'000ull;
        u64 prod = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            for (int j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("modular helpers") {
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(mulmod(u64{1} << 63, 4, 1'000'000'007) == (static_cast<unsigned __int128>(u64{1} << 63) * 4) % 1'000'000'007);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(gcd_u64(12, 18) == 6);
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    CHECK(sat_pow(2, 70) == UINT64_MAX);
}

TEST_CASE("count parsing") {
    CHECK(parse_count("1e7") == 10'000'000);
    CHECK(parse_count("12345") == 12345);
    CHECK_THROWS(parse_count("-3"));
    CHECK_THROWS(parse_count("1.5"));
}
