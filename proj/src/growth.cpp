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

#include "reclab/growth.hpp"

#include <sstream>

#include "reclab/errors.hpp"

namespace reclab {

namespace {

const BigInt kSaturated = BigInt(1) << 64;

BigInt big_pow(BigInt b, u64 e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

BigInt sat_big_pow(u64 base, const BigInt& e) {
    if (e >= 64) return kSaturated;
    const BigInt v = big_pow(base, e.convert_to<u64>());
    return v >= kSaturated ? kSaturated : v;
}

BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace

GrowthFn GrowthFn::power(Rational exponent) {
    if (exponent <= 0) throw DomainError("power exponent must be positive");
    if (num(exponent) > 64 || den(exponent) > 64) throw DomainError("power exponent too large");
    GrowthFn g;
    g.kind_ = Kind::Power;
    g.exponent_ = exponent;
    return g;
}

GrowthFn GrowthFn::exponential(u64 base) {
    if (base < 2) throw DomainError("exponential base must be at least 2");
    GrowthFn g;
    g.kind_ = Kind::Exponential;
    g.base_ = base;
    return g;
}

GrowthFn GrowthFn::tower(unsigned levels) {
    if (levels == 0) throw DomainError("tower needs at least one level");
    GrowthFn g;
    g.kind_ = Kind::Tower;
    g.levels_ = levels;
    return g;
}

GrowthFn GrowthFn::table(std::vector<u64> values) {
    if (values.empty()) throw DomainError("growth table is empty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1]) throw DomainError("growth table must be strictly increasing");
    GrowthFn g;
    g.kind_ = Kind::Table;
    g.table_ = std::move(values);
    return g;
}

GrowthFn GrowthFn::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("growth function needs kind:params, got " + text);
    const std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
    if (kind == "pow") return power(parse_rational(arg));
    if (kind == "exp") return exponential(parse_count(arg));
    if (kind == "tower") return tower(static_cast<unsigned>(parse_count(arg)));
    if (kind == "table") {
        std::vector<u64> v;
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) v.push_back(parse_count(item));
        return table(std::move(v));
    }
    throw DomainError("unknown growth kind: " + kind);
}

std::string GrowthFn::name() const {
    switch (kind_) {
        case Kind::Power: return "pow:" + to_string(exponent_);
        case Kind::Exponential: return "exp:" + std::to_string(base_);
        case Kind::Tower: return "tower:" + std::to_string(levels_);
        case Kind::Table: {
            std::string s = "table:";
            for (std::size_t i = 0; i < table_.size(); ++i) s += (i ? "," : "") + std::to_string(table_[i]);
            return s;
        }
    }
    return "?";
}

BigInt GrowthFn::value(u64 x) const {
    switch (kind_) {
        case Kind::Power: {
            // floor(x^(p/q)) = largest v with v^q <= x^p
            const u64 p = num(exponent_).convert_to<u64>(), q = den(exponent_).convert_to<u64>();
            const BigInt target = big_pow(x, p);
            if (q == 1) return target;
            BigInt lo = 0, hi = 1;
            while (big_pow(hi, q) <= target) hi *= 2;
            while (hi - lo > 1) {
                const BigInt mid = (lo + hi) / 2;
                (big_pow(mid, q) <= target ? lo : hi) = mid;
            }
            return lo;
        }
        case Kind::Exponential: return sat_big_pow(base_, x);
        case Kind::Tower: {
            BigInt v = x;
            for (unsigned i = 0; i < levels_ && v < kSaturated; ++i) v = sat_big_pow(2, v);
            return v >= kSaturated ? kSaturated : v;
        }
        case Kind::Table:
            if (x == 0 || x > table_.size()) throw RangeError("growth table has no value at " + std::to_string(x));
            return table_[x - 1];
    }
    return 0;
}

bool GrowthFn::at_most(const BigInt& y, u64 x) const {
    if (kind_ == Kind::Power) {
        const u64 p = num(exponent_).convert_to<u64>(), q = den(exponent_).convert_to<u64>();
        if (y <= 0) return true;
        return big_pow(y, q) <= big_pow(x, p);
    }
    return y <= value(x);
}

u64 GrowthFn::inverse_floor(const BigInt& y) const {
    if (kind_ == Kind::Table) {
        u64 k = 0;
        while (k < table_.size() && BigInt(table_[k]) <= y) ++k;
        return k;
    }
    // f(x) <= y exactly; f is real valued for fractional powers
    auto le = [&](u64 x) {
        if (kind_ == Kind::Power) {
            if (y < 0) return false;
            const u64 p = num(exponent_).convert_to<u64>(), q = den(exponent_).convert_to<u64>();
            return big_pow(x, p) <= big_pow(y, q);
        }
        return value(x) <= y;
    };
    if (!le(0)) return 0;
    u64 lo = 0, hi = 1;
    while (le(hi)) {
        lo = hi;
        if (hi > (u64{1} << 62)) return hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        (le(mid) ? lo : hi) = mid;
    }
    return lo;
}

u64 GrowthFn::least_reaching(const BigInt& y) const {
    if (kind_ == Kind::Table) {
        for (u64 k = 0; k < table_.size(); ++k)
            if (BigInt(table_[k]) >= y) return k + 1;
        throw RangeError("growth table never reaches " + y.str());
    }
    u64 x = inverse_floor(y);
    while (!at_most(y, x)) ++x;
    return x;
}

}  // namespace reclab
