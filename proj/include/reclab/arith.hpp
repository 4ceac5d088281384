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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace reclab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

u64 isqrt(u64 n);
bool is_square(u64 n);

// Prime factorisation with multiplicity, ascending. Trial division up to
// 10^6, Pollard rho (Brent) above that.
std::vector<std::pair<u64, int>> factorize(u64 n);
int big_omega(u64 n);
u64 smallest_prime_factor(u64 n);

// a^e, saturating at UINT64_MAX.
u64 sat_pow(u64 a, unsigned e);

// Primes <= limit in ascending order (simple sieve; limit <= ~10^9).
std::vector<u64> primes_up_to(u64 limit);

i64 floor_mod(i64 a, i64 m);
u64 gcd_u64(u64 a, u64 b);

// Legendre symbol (a | p) for odd prime p: 1, -1, or 0.
int legendre(i64 a, u64 p);

// Parses "1e7", "10000000", "1_000_000" into an unsigned integer.
u64 parse_count(const std::string& text);

}  // namespace reclab
