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

#include "reclab/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reclab/errors.hpp"

namespace reclab {

namespace {

constexpr u64 kCheckBound = 1'000'000;

std::vector<i64> parse_ints(const std::string& text) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw DomainError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw DomainError("bad integer '" + item + "'");
        }
    }
    return out;
}

std::vector<u64> multiples_of(u64 q) {
    std::vector<u64> out;
    for (u64 j = 1; j < q; ++j) out.push_back(j * q);
    return out;
}

}  // namespace

u64 poly_root_count(const std::vector<i64>& coeffs, u64 p) {
    if (p < 2 || p > 1'000'000) throw DomainError("modulus must lie in [2, 10^6]");
    std::vector<u64> c;
    for (i64 a : coeffs) c.push_back(static_cast<u64>(floor_mod(a, static_cast<i64>(p))));
    u64 roots = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 v = 0;
        for (u64 a : c) v = (v * x + a) % p;
        if (v == 0) ++roots;
    }
    return roots;
}

std::optional<BlockedModulus> blocked_for_quadratic_form(const QuadraticForm& f, u64 q) {
    const i64 D = f.discriminant();
    if (D >= 0 && is_square(static_cast<u64>(D))) throw DomainError("discriminant is a perfect square");
    if (q == 2 || !is_prime(q)) throw DomainError("q must be an odd prime");
    const i64 qi = static_cast<i64>(q);
    if (floor_mod(4 * f.a, qi) == 0 || floor_mod(D, qi) == 0) throw DomainError("q divides 4aD");
    if (legendre(D, q) != -1) return std::nullopt;
    BlockedModulus bm;
    bm.c = q * q;
    bm.blocked = multiples_of(q);
    bm.provenance = "4a*F = (2ax+by)^2 - D*y^2 with D = " + std::to_string(D) + " a non-residue mod " +
                    std::to_string(q) + ": q | F forces q^2 | F";
    return bm;
}

InertTest empirical_inert_test(const std::vector<u64>& values, u64 q) {
    if (values.empty()) throw DomainError("no values to test");
    if (q < 2) throw DomainError("q must be at least 2");
    InertTest t;
    t.inert_like = true;
    for (u64 v : values) {
        if (v % q) continue;
        ++t.multiples_seen;
        if ((v / q) % q) {
            t.inert_like = false;
            if (!t.counterexample) t.counterexample = v;
        }
    }
    t.weak = t.multiples_seen == 0;
    return t;
}

Rational haar_upper_bound(const std::vector<BlockedModulus>& list) {
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (gcd_u64(list[i].c, list[j].c) != 1)
                throw DomainError("moduli " + std::to_string(list[i].c) + " and " + std::to_string(list[j].c) +
                                  " are not coprime");
    Rational r = 1;
    for (const BlockedModulus& bm : list) {
        if (bm.c < 2 || bm.blocked.size() >= bm.c) throw DomainError("blocked set must be a proper subset of Z/c");
        r *= Rational(bm.c - bm.blocked.size(), bm.c);
    }
    return r;
}

std::vector<u64> cubic_norm_values(i64 radius) {
    std::vector<u64> out;
    for (i64 x = -radius; x <= radius; ++x)
        for (i64 y = -radius; y <= radius; ++y)
            for (i64 z = -radius; z <= radius; ++z) {
                const i64 v = x * x * x + 2 * y * y * y + 4 * z * z * z - 6 * x * y * z;
                if (v > 0) out.push_back(static_cast<u64>(v));
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<u64> quadratic_form_values(const QuadraticForm& f, u64 bound, i64 radius) {
    Window w(1, bound);
    for (i64 x = -radius; x <= radius; ++x)
        for (i64 y = -radius; y <= radius; ++y) {
            const i64 v = f.a * x * x + f.b * x * y + f.c * y * y;
            if (v >= 1 && static_cast<u64>(v) <= bound) w.insert(static_cast<u64>(v));
        }
    return w.members();
}

void validate_blocked(const BlockedModulus& bm, const std::vector<u64>& members) {
    std::vector<char> is_blocked(bm.c, 0);
    for (u64 r : bm.blocked) is_blocked[r % bm.c] = 1;
    std::vector<u64> found;
    for (u64 v : members)
        if (is_blocked[v % bm.c]) found.push_back(v);
    std::vector<u64> declared = bm.exceptions;
    std::sort(declared.begin(), declared.end());
    // declared exceptions above the scanned range cannot show up
    const u64 top = members.empty() ? 0 : members.back();
    std::erase_if(declared, [&](u64 e) { return e > top; });
    if (found != declared)
        throw VerificationError("modulus " + std::to_string(bm.c) + ": " + std::to_string(found.size()) +
                                " members fall in blocked classes, " + std::to_string(declared.size()) +
                                " exceptions declared");
}

BohrTarget BohrTarget::parse(const std::string& text) {
    BohrTarget t;
    if (text == "primes") return t;
    if (text == "norm:cubic2") {
        t.kind = Kind::CubicNorm;
        return t;
    }
    if (text.rfind("poly:", 0) == 0) {
        t.kind = Kind::Polynomial;
        t.coeffs = parse_ints(text.substr(5));
        if (t.coeffs.size() < 2) throw DomainError("polynomial must be nonconstant");
        return t;
    }
    if (text.rfind("qform:", 0) == 0) {
        const std::vector<i64> abc = parse_ints(text.substr(6));
        if (abc.size() != 3) throw DomainError("qform needs a,b,c");
        t.kind = Kind::QuadraticForm;
        t.form = {abc[0], abc[1], abc[2]};
        return t;
    }
    throw DomainError("unknown bohr family '" + text + "' (primes, poly:..., qform:a,b,c, norm:cubic2)");
}

std::string BohrTarget::name() const {
    std::string s;
    auto join = [](const std::vector<i64>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out;
    };
    switch (kind) {
        case Kind::Primes: return "primes";
        case Kind::Polynomial: return "poly:" + join(coeffs);
        case Kind::QuadraticForm: return "qform:" + join({form.a, form.b, form.c});
        case Kind::CubicNorm: return "norm:cubic2";
    }
    return s;
}

BohrReport bohr_pipeline(const BohrTarget& target, u64 prime_bound) {
    if (prime_bound > 1'000'000) throw BudgetError("prime bound above 10^6", 1'000'000);
    BohrReport rep;
    rep.family = target.name();
    const std::vector<u64> qs = primes_up_to(prime_bound);
    std::vector<u64> members;

    switch (target.kind) {
        case BohrTarget::Kind::Primes: {
            rep.check_bound = kCheckBound;
            members = family_window(SetFamily::primes(), 1, kCheckBound).members();
            for (u64 p : qs)
                rep.moduli.push_back({p, {0}, {p}, "only p itself lies in 0 mod " + std::to_string(p)});
            break;
        }
        case BohrTarget::Kind::Polynomial: {
            rep.check_bound = kCheckBound;
            members = family_window(SetFamily::polynomial(target.coeffs), 1, kCheckBound).members();
            for (u64 q : qs)
                if (poly_root_count(target.coeffs, q) == 0)
                    rep.moduli.push_back({q, {0}, {}, "P has no root mod " + std::to_string(q)});
            break;
        }
        case BohrTarget::Kind::QuadraticForm: {
            QuadraticForm f = target.form;
            if (f.a == 0) std::swap(f.a, f.c);
            const i64 D = f.discriminant();
            if (D >= 0 && is_square(static_cast<u64>(D))) throw DomainError("discriminant is a perfect square");
            if (D < 0 && f.a < 0) throw DomainError("negative definite form has no positive values");
            i64 radius = 1000;
            if (D < 0) {
                const double a = static_cast<double>(f.a), b = static_cast<double>(f.b), c = static_cast<double>(f.c);
                const double lambda = (a + c - std::sqrt((a - c) * (a - c) + b * b)) / 2;
                radius = std::min<i64>(2000, static_cast<i64>(std::sqrt(kCheckBound / lambda)) + 1);
                if (radius == 2000) rep.notes.push_back("value scan box capped at |x|,|y| <= 2000");
            } else {
                rep.notes.push_back("indefinite form: values sampled from |x|,|y| <= 1000");
            }
            rep.check_bound = kCheckBound;
            members = quadratic_form_values(f, kCheckBound, radius);
            for (u64 q : qs) {
                if (q == 2) continue;
                const i64 qi = static_cast<i64>(q);
                if (floor_mod(4 * f.a, qi) == 0 || floor_mod(D, qi) == 0) continue;
                if (auto bm = blocked_for_quadratic_form(f, q)) rep.moduli.push_back(*bm);
            }
            break;
        }
        case BohrTarget::Kind::CubicNorm: {
            members = cubic_norm_values(30);
            rep.check_bound = members.back();
            rep.notes.push_back("empirical: norm values from |x|,|y|,|z| <= 30");
            for (u64 q : qs) {
                const InertTest t = empirical_inert_test(members, q);
                if (!t.inert_like || t.weak) continue;
                rep.moduli.push_back({q * q, multiples_of(q), {},
                                      "empirical (" + std::to_string(t.multiples_seen) + " multiples of " +
                                          std::to_string(q) + " seen, all divisible by q^2)"});
            }
            break;
        }
    }

    Rational bound = 1;
    for (const BlockedModulus& bm : rep.moduli) {
        validate_blocked(bm, members);
        bound *= Rational(bm.c - bm.blocked.size(), bm.c);
        rep.trail.push_back(bound);
    }
    rep.final_bound = haar_upper_bound(rep.moduli);
    if (rep.final_bound != bound) throw VerificationError("trail and product disagree");
    return rep;
}

}  // namespace reclab
