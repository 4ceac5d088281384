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

#include "reclab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "reclab/errors.hpp"

namespace reclab {

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

// Decimal only: cpp_int would read a leading 0 as an octal prefix.
BigInt parse_decimal(const std::string& text, const std::string& whole) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i == text.size()) throw DomainError("bad rational: " + whole);
    BigInt v = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw DomainError("bad rational: " + whole);
        v = v * 10 + (text[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(parse_decimal(text, text));
        // decimal literal, read exactly
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        BigInt den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return Rational(parse_decimal(digits, text), den);
    }
    const BigInt num = parse_decimal(text.substr(0, slash), text);
    const BigInt den = parse_decimal(text.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator: " + text);
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(u64 n) {
    const u64 r = isqrt(n);
    return r * r == n;
}

namespace {

u64 pollard_brent(u64 n, u64 seed) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(seed);
    while (true) {
        u64 y = rng() % (n - 1) + 1;
        const u64 c = rng() % (n - 1) + 1;
        const u64 m = 128;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n, n ^ 0x9e3779b97f4a7c15ULL);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> result;
    if (n < 2) return result;
    auto push = [&](u64 p) {
        if (!result.empty() && result.back().first == p)
            ++result.back().second;
        else
            result.emplace_back(p, 1);
    };
    while (n % 2 == 0) {
        push(2);
        n /= 2;
    }
    constexpr u64 trial_limit = 1000000;
    for (u64 p = 3; p <= trial_limit && p * p <= n; p += 2) {
        while (n % p == 0) {
            push(p);
            n /= p;
        }
    }
    if (n == 1) return result;
    std::vector<u64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (u64 p : rest) push(p);
    return result;
}

int big_omega(u64 n) {
    int total = 0;
    for (const auto& [p, e] : factorize(n)) total += e;
    return total;
}

u64 smallest_prime_factor(u64 n) {
    if (n < 2) return n;
    return factorize(n).front().first;
}

u64 sat_pow(u64 a, unsigned e) {
    u64 result = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (a != 0 && result > UINT64_MAX / a) return UINT64_MAX;
        result *= a;
    }
    return result;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i <= limit / i)
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

i64 floor_mod(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

int legendre(i64 a, u64 p) {
    const u64 r = static_cast<u64>(floor_mod(a, static_cast<i64>(p)));
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 parse_count(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '_' && c != '\'') t.push_back(c);
    if (t.empty()) throw DomainError("empty count");
    const auto e = t.find_first_of("eE");
    try {
        if (e == std::string::npos) {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(t, &used);
            if (used != t.size() || t[0] == '-') throw DomainError("bad count: " + text);
            return v;
        }
        std::size_t used = 0;
        const unsigned long long mant = std::stoull(t.substr(0, e), &used);
        if (used != e) throw DomainError("bad count: " + text);
        const int exp = std::stoi(t.substr(e + 1));
        if (exp < 0 || exp > 19) throw DomainError("bad count: " + text);
        u64 v = mant;
        for (int i = 0; i < exp; ++i) {
            if (v > UINT64_MAX / 10) throw RangeError("count overflows 64 bits: " + text);
            v *= 10;
        }
        return v;
    } catch (const std::logic_error&) {
        throw DomainError("bad count: " + text);
    }
}

}  // namespace reclab
