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

#include "reclab/generators.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "reclab/errors.hpp"
#include "reclab/kernels.hpp"

namespace reclab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

bool digit_balanced(u64 n) { return n > 0 && 2 * static_cast<u64>(std::popcount(n)) == std::bit_width(n); }

bool sum_of_two_squares(u64 n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n))
        if (p % 4 == 3 && (e & 1)) return false;
    return true;
}

// Beyond this x the polynomial is increasing and positive on the reals.
u64 poly_monotone_from(const std::vector<i64>& c) {
    BigInt tail = 0;
    for (std::size_t i = 1; i < c.size(); ++i) tail += abs(BigInt(c[i]));
    const BigInt bound = 2 + BigInt(c.size() - 1) * tail;
    if (bound > BigInt(u64{1} << 40)) throw RangeError("polynomial coefficients too large");
    return bound.convert_to<u64>();
}

u64 poly_tail_sum(const std::vector<i64>& c) {
    BigInt tail = 0;
    for (std::size_t i = 1; i < c.size(); ++i) tail += abs(BigInt(c[i]));
    return tail.convert_to<u64>();
}

bool poly_member(const std::vector<i64>& c, u64 n) {
    const u64 x0 = poly_monotone_from(c);
    const BigInt target(n);
    for (u64 x = 0; x < x0; ++x)
        if (poly_eval(c, x) == target) return true;
    // P(x) >= x - tail on the monotone branch, so any solution has x <= n + tail.
    BigInt lo = x0, hi = BigInt(n) + poly_tail_sum(c) + 1;
    while (lo <= hi) {
        const BigInt mid = (lo + hi) / 2;
        const BigInt v = poly_eval(c, mid);
        if (v == target) return true;
        if (v < target)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return false;
}

std::vector<u64> poly_values(const std::vector<i64>& c, u64 lo, u64 hi) {
    std::vector<u64> out;
    const u64 x0 = poly_monotone_from(c);
    const BigInt blo(lo), bhi(hi);
    for (u64 x = 0;; ++x) {
        const BigInt v = poly_eval(c, x);
        if (x >= x0 && v > bhi) break;
        if (v >= 1 && v >= blo && v <= bhi) out.push_back(v.convert_to<u64>());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

u64 checked_add(u64 a, u64 b) {
    if (a > UINT64_MAX - b) throw RangeError("integer overflow in membership test");
    return a + b;
}

// Smallest prime factor of an odd composite n, by trial division over base.
u64 spf_trial(u64 n, const std::vector<u64>& base) {
    for (u64 p : base) {
        if (p * p > n) break;
        if (n % p == 0) return p;
    }
    return smallest_prime_factor(n);
}

}  // namespace

SetFamily SetFamily::chen(bool strict) {
    SetFamily f;
    f.kind = strict ? FamilyKind::ChenPrimesStrict : FamilyKind::ChenPrimes;
    return f;
}

SetFamily SetFamily::bounded_gap(u64 h) {
    if (h == 0) throw DomainError("bounded-gap h must be positive");
    SetFamily f;
    f.kind = FamilyKind::BoundedGapPrimes;
    f.h = h;
    return f;
}

SetFamily SetFamily::polynomial(std::vector<i64> coeffs) {
    while (!coeffs.empty() && coeffs.front() == 0) coeffs.erase(coeffs.begin());
    if (coeffs.size() < 2) throw DomainError("polynomial must have degree at least 1");
    if (coeffs.front() <= 0) throw DomainError("leading coefficient must be positive");
    SetFamily f;
    f.kind = FamilyKind::PolynomialImage;
    f.coeffs = std::move(coeffs);
    poly_monotone_from(f.coeffs);
    return f;
}

SetFamily SetFamily::digit_balanced() {
    SetFamily f;
    f.kind = FamilyKind::DigitBalanced;
    return f;
}

SetFamily SetFamily::sums_of_two_squares() {
    SetFamily f;
    f.kind = FamilyKind::SumsOfTwoSquares;
    return f;
}

SetFamily SetFamily::explicit_set(std::vector<u64> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) throw DomainError("explicit members must be positive");
        if (i && values[i] <= values[i - 1]) throw DomainError("explicit members must be sorted and distinct");
    }
    SetFamily f;
    f.kind = FamilyKind::Explicit;
    f.values = std::move(values);
    return f;
}

SetFamily SetFamily::parse(const std::string& name) {
    if (name == "primes") return primes();
    if (name == "chen") return chen(false);
    if (name == "chen-strict") return chen(true);
    if (name == "digit-balanced") return digit_balanced();
    if (name == "sums-of-two-squares") return sums_of_two_squares();
    if (name == "naturals") return polynomial({1, 0});
    if (name == "squares") return polynomial({1, 0, 0});
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string head = name.substr(0, colon), rest = name.substr(colon + 1);
        if (head == "bounded-gap") return bounded_gap(parse_count(rest));
        if (head == "poly") {
            std::vector<i64> c;
            for (const auto& t : split(rest, ',')) {
                try {
                    c.push_back(std::stoll(t));
                } catch (const std::exception&) {
                    throw DomainError("bad polynomial coefficient: " + t);
                }
            }
            return polynomial(std::move(c));
        }
        if (head == "explicit") {
            std::vector<u64> v;
            for (const auto& t : split(rest, ',')) v.push_back(parse_count(t));
            return explicit_set(std::move(v));
        }
    }
    throw DomainError("unknown family: " + name);
}

std::string SetFamily::name() const {
    switch (kind) {
        case FamilyKind::Primes: return "primes";
        case FamilyKind::ChenPrimes: return "chen";
        case FamilyKind::ChenPrimesStrict: return "chen-strict";
        case FamilyKind::BoundedGapPrimes: return "bounded-gap:" + std::to_string(h);
        case FamilyKind::PolynomialImage: return "poly:" + join(coeffs);
        case FamilyKind::DigitBalanced: return "digit-balanced";
        case FamilyKind::SumsOfTwoSquares: return "sums-of-two-squares";
        case FamilyKind::Explicit: return "explicit:" + join(values);
    }
    return "?";
}

BigInt poly_eval(const std::vector<i64>& coeffs, const BigInt& x) {
    BigInt v = 0;
    for (i64 c : coeffs) v = v * x + c;
    return v;
}

bool is_chen(u64 p, bool strict) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    const u64 n = checked_add(p, 2);
    if (is_prime(n)) return true;
    const u64 q = smallest_prime_factor(n);
    if (!is_prime(n / q)) return false;
    return !strict || sat_pow(q, 10) >= p;
}

bool membership(const SetFamily& f, u64 n) {
    if (n == 0) throw DomainError("membership is defined for n >= 1");
    switch (f.kind) {
        case FamilyKind::Primes: return is_prime(n);
        case FamilyKind::ChenPrimes: return is_prime(n) && is_chen(n, false);
        case FamilyKind::ChenPrimesStrict: return is_prime(n) && is_chen(n, true);
        case FamilyKind::BoundedGapPrimes: return is_prime(n) && is_prime(checked_add(n, f.h));
        case FamilyKind::PolynomialImage: return poly_member(f.coeffs, n);
        case FamilyKind::DigitBalanced: return digit_balanced(n);
        case FamilyKind::SumsOfTwoSquares: return sum_of_two_squares(n);
        case FamilyKind::Explicit: return std::binary_search(f.values.begin(), f.values.end(), n);
    }
    return false;
}

Window family_window(const SetFamily& f, u64 lo, u64 hi) {
    if (hi < lo) throw DomainError("window hi < lo");
    Window w(lo, hi);
    const u64 from = std::max<u64>(lo, 1);
    switch (f.kind) {
        case FamilyKind::Primes: {
            const Window p = kernels::sieve_primes(hi);
            return p.rebased(lo, hi);
        }
        case FamilyKind::ChenPrimes:
        case FamilyKind::ChenPrimesStrict: {
            const bool strict = f.kind == FamilyKind::ChenPrimesStrict;
            const Window p = kernels::sieve_primes(checked_add(hi, 2));
            const std::vector<u64> base = primes_up_to(isqrt(hi + 2) + 1);
            p.for_each([&](u64 q) {
                if (q < from || q > hi) return;
                const u64 n = q + 2;
                bool chen = p.contains(n);
                if (!chen) {
                    const u64 s = spf_trial(n, base);
                    chen = p.contains(n / s) && (!strict || sat_pow(s, 10) >= q);
                }
                if (chen) w.insert(q);
            });
            return w;
        }
        case FamilyKind::BoundedGapPrimes: {
            const Window p = kernels::sieve_primes(checked_add(hi, f.h));
            p.for_each([&](u64 q) {
                if (q >= from && q <= hi && p.contains(q + f.h)) w.insert(q);
            });
            return w;
        }
        case FamilyKind::PolynomialImage:
            for (u64 v : poly_values(f.coeffs, from, hi)) w.insert(v);
            return w;
        case FamilyKind::DigitBalanced:
            for (u64 n = from; n <= hi; ++n)
                if (digit_balanced(n)) w.insert(n);
            return w;
        case FamilyKind::SumsOfTwoSquares:
            for (u64 a = 0; a * a <= hi; ++a)
                for (u64 b = a; a * a + b * b <= hi; ++b) {
                    const u64 v = a * a + b * b;
                    if (v >= from) w.insert(v);
                }
            return w;
        case FamilyKind::Explicit:
            for (u64 v : f.values)
                if (v >= from && v <= hi) w.insert(v);
            return w;
    }
    return w;
}

std::vector<u64> enumerate(const SetFamily& f, u64 hi) {
    if (hi == 0) return {};
    return family_window(f, 1, hi).members();
}

CountingProfile count_profile(const SetFamily& f, u64 x_max, const std::vector<u64>& shifts,
                              std::vector<u64> x_values) {
    if (x_max < 2) throw DomainError("x_max must be at least 2");
    u64 max_shift = 0;
    for (u64 m : shifts) {
        if (m == 0) throw DomainError("shifts must be positive");
        max_shift = std::max(max_shift, m);
    }
    if (max_shift >= kWindowBitBudget || x_max > kWindowBitBudget - max_shift)
        throw BudgetError("count_profile window exceeds the memory budget",
                          max_shift >= kWindowBitBudget ? 0 : kWindowBitBudget - max_shift);
    if (x_values.empty()) {
        for (u64 x = 10; x < x_max; x *= 10) x_values.push_back(x);
        x_values.push_back(x_max);
    }
    for (std::size_t i = 0; i < x_values.size(); ++i) {
        if (x_values[i] > x_max || x_values[i] == 0) throw DomainError("x values must lie in [1, x_max]");
        if (i && x_values[i] <= x_values[i - 1]) throw DomainError("x values must be increasing");
    }
    const Window e = family_window(f, 1, x_max + max_shift);
    CountingProfile prof;
    prof.x_values = x_values;
    for (u64 x : x_values) prof.E_of_x.push_back(e.count_range(1, x));
    for (u64 m : shifts) {
        auto& col = prof.E_m_of_x[m];
        for (u64 x : x_values) col.push_back(shifted_overlap(e.rebased(1, x), e, m));
        const u64 ex = prof.E_of_x.back();
        prof.c_m_estimates[m] = ex ? Rational(col.back(), ex) : Rational(0);
    }
    return prof;
}

u64 digit_balanced_count(u64 n_max) {
    if (n_max == 0) throw DomainError("n_max must be positive");
    u64 c = 0;
    for (u64 n = 1; n <= n_max; ++n) c += digit_balanced(n);
    return c;
}

}  // namespace reclab
