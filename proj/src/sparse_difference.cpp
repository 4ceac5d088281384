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

#include "reclab/sparse_difference.hpp"

#include <algorithm>
#include <cmath>

#include "reclab/errors.hpp"

namespace reclab {

std::vector<kernels::Interval> thick_intervals(const ThickSpec& thick) {
    const GrowthFn& g = thick.g;
    u64 k_max = thick.k_max;
    if (k_max == 0) throw DomainError("k_max must be positive");
    if (g.bounded_domain()) k_max = std::min<u64>(k_max, g.domain_size());
    std::vector<kernels::Interval> out;
    for (u64 k = 1; k <= k_max; ++k) {
        const BigInt gk = g.value(k);
        if (gk >= BigInt(u64{1} << 62)) break;  // far beyond any window
        const u64 hi = gk.convert_to<u64>();
        if (hi <= k)
            throw GrowthTooSlow("I_" + std::to_string(k) + " = [g(k)-k, g(k)] does not start at a positive integer");
        const kernels::Interval iv{hi - k, hi};
        if (!out.empty() && iv.lo <= out.back().hi)
            throw GrowthTooSlow("I_" + std::to_string(k - 1) + " and I_" + std::to_string(k) + " overlap (g(" +
                                std::to_string(k) + ") - " + std::to_string(k) + " <= g(" + std::to_string(k - 1) +
                                "))");
        out.push_back(iv);
    }
    return out;
}

u64 count_r_hits(const Window& A, const std::vector<kernels::Interval>& R, const Window* allowed) {
    std::vector<u64> shifts;
    const u64 span = A.hi() - A.lo();
    for (const auto& iv : R)
        for (u64 m = iv.lo; m <= iv.hi && m <= span; ++m)
            if (!allowed || allowed->contains(m)) shifts.push_back(m);
    u64 hits = 0;
    for (u64 h : kernels::shifted_overlaps(A, A, shifts)) hits += h;
    return hits;
}

SparseDiffResult build_sparse_difference(const Window& E, const GrowthFn& f, const ThickSpec& thick,
                                         const SparseDiffOptions& opt) {
    const u64 window_hi = E.hi();
    const u64 size_E = E.count();
    if (size_E == 0) throw DomainError("E has no members in the window");
    const std::vector<kernels::Interval> intervals = thick_intervals(thick);
    if (intervals.empty() || intervals.front().hi > window_hi)
        throw DomainError("window_hi " + std::to_string(window_hi) + " is too small to contain I_1");

    // the D-set bound at the window edge
    const BigInt x(window_hi);
    const u64 g_inv = std::min<u64>(thick.g.inverse_floor(x), intervals.size());
    const u64 f_inv = f.inverse_floor(x);
    const BigInt lhs = BigInt(g_inv) * (BigInt(f_inv) + g_inv);
    if (2 * lhs > size_E)
        throw GrowthTooSlow("g^-1(x)(f^-1(x)+g^-1(x)) = " + lhs.str() + " exceeds E(x)/2 = " +
                            to_string(Rational(size_E, 2)) + " at x = " + std::to_string(window_hi));

    SparseDiffResult res;
    std::vector<kernels::SieveRule> rules;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& iv = intervals[i];
        if (iv.lo > window_hi) break;
        res.R.push_back(iv);
        const u64 s_min = f.least_reaching(iv.hi);
        if (s_min <= window_hi && iv.hi <= window_hi - s_min) {
            rules.push_back({s_min, iv.lo, iv.hi});
            res.sieved_levels.push_back(i + 1);
        }
    }
    const Window* allowed = opt.allowed_offsets ? &*opt.allowed_offsets : nullptr;
    kernels::CSieveResult cs = kernels::c_sieve(E, rules, allowed);

    Window B(E.lo(), E.hi());
    for (const auto& iv : res.R)
        for (u64 r = iv.lo; r <= iv.hi && r <= window_hi; ++r)
            if (!allowed || allowed->contains(r)) B |= translated(cs.kept, static_cast<i64>(r));
    B &= E;

    res.A = set_minus(cs.kept, B);
    res.E = E;
    res.C = std::move(cs.kept);
    res.B = std::move(B);
    res.provisional = std::move(cs.provisional);
    res.r_hits = count_r_hits(res.A, res.R, allowed);
    if (res.r_hits != 0)
        throw VerificationError("(A-A) meets R in " + std::to_string(res.r_hits) + " ordered pairs");
    res.provisional_tail = (res.A & res.provisional).count();
    res.density_A_in_E = Rational(res.A.count() - res.provisional_tail, size_E);
    res.density_A_with_provisional = Rational(res.A.count(), size_E);
    res.density_B_in_E = Rational(res.B.count(), size_E);
    return res;
}

SparseDiffResult build_sparse_difference(const SetFamily& E, const GrowthFn& f, const ThickSpec& thick,
                                         u64 window_hi, const SparseDiffOptions& opt) {
    return build_sparse_difference(family_window(E, 1, window_hi), f, thick, opt);
}

TuneResult auto_tune_growth(const SetFamily& family, const GrowthFn& f, u64 window_hi,
                            const SparseDiffOptions& opt) {
    const Window E = family_window(family, 1, window_hi);
    const Rational target(9, 10);
    TuneResult out;
    for (u64 G = 2; G <= window_hi; G *= 2) {
        std::vector<u64> table;
        u64 v = G;
        for (unsigned k = 1; k <= kTuneLevels; ++k) {
            table.push_back(v);
            if (v > (u64{1} << 62) / G) break;
            v *= G;
        }
        const ThickSpec spec{GrowthFn::table(table), table.size()};
        TuneStep step{G, "", std::nullopt};
        try {
            SparseDiffResult r = build_sparse_difference(E, f, spec, opt);
            step.density_A_in_E = r.density_A_in_E;
            if (r.density_A_in_E >= target) {
                step.status = "ok";
                out.ladder.push_back(step);
                out.spec = spec;
                out.result = std::move(r);
                return out;
            }
            step.status = "density below 9/10";
        } catch (const GrowthTooSlow& e) {
            step.status = std::string("growth-too-slow: ") + e.what();
        } catch (const DomainError& e) {
            step.status = std::string("domain: ") + e.what();
        }
        out.ladder.push_back(step);
    }
    std::string diag = "no table growth G^k (G = 2, 4, ...) reached density 9/10 on [1, " +
                       std::to_string(window_hi) + "]";
    if (!out.ladder.empty()) diag += "; last step: " + out.ladder.back().status;
    throw SearchFailed(diag);
}

SelbergReport selberg_check(u64 x, u64 m_max) {
    if (x < 2 || m_max == 0) throw DomainError("selberg_check needs x >= 2 and m_max >= 1");
    const Window P = family_window(SetFamily::primes(), 1, x + m_max);
    const Window Px = P.rebased(1, x);
    SelbergReport rep{x, m_max, Px.count(), {}, 0, Rational(0), 0.0};
    std::vector<u64> shifts(m_max);
    for (u64 m = 1; m <= m_max; ++m) shifts[m - 1] = m;
    rep.E_m = kernels::shifted_overlaps(Px, P, shifts);
    for (u64 m = 1; m <= m_max; ++m) {
        const Rational r(rep.E_m[m - 1], rep.E_x);
        if (r > rep.max_ratio || rep.argmax_m == 0) {
            rep.max_ratio = r;
            rep.argmax_m = m;
        }
    }
    const double lx = std::log(static_cast<double>(x));
    rep.fitted_C = lx > 1.0 ? to_double(rep.max_ratio) * lx / std::log(lx) : 0.0;
    return rep;
}

DigitBattery digit_counterexample_battery(u64 a_max, unsigned window_exp) {
    if (a_max == 0) throw DomainError("differences must be positive (a_max >= 1)");
    if (window_exp == 0 || window_exp > 26) throw DomainError("window_exp must lie in [1, 26]");
    const u64 hi = u64{1} << window_exp;
    const Window E = family_window(SetFamily::digit_balanced(), 1, hi);
    DigitBattery out{window_exp, E.count(), {}, {}, {}};
    std::vector<u64> shifts(a_max);
    for (u64 a = 1; a <= a_max; ++a) shifts[a - 1] = a;
    out.counts = kernels::shifted_overlaps(E, E, shifts);
    for (u64 c : out.counts) out.ratios.push_back(out.size_E ? Rational(c, out.size_E) : Rational(0));
    for (unsigned j = 1; j <= window_exp; ++j) out.banach.push_back(banach_window_max(E, u64{1} << j));
    return out;
}

CmScan c_m_syndeticity_scan(const SetFamily& family, const Rational& eta, u64 x, u64 m_max) {
    if (eta <= 0) throw DomainError("eta must be positive");
    if (x < 2 || m_max == 0) throw DomainError("c_m scan needs x >= 2 and m_max >= 1");
    const Window E = family_window(family, 1, x + m_max);
    const Window Ex = E.rebased(1, x);
    const u64 ex = Ex.count();
    CmScan out{eta, x, m_max, {}, {}, std::nullopt, Rational(0)};
    std::vector<u64> shifts(m_max);
    for (u64 m = 1; m <= m_max; ++m) shifts[m - 1] = m;
    const std::vector<u64> em = kernels::shifted_overlaps(Ex, E, shifts);
    Window level(1, m_max);
    for (u64 m = 1; m <= m_max; ++m) {
        const Rational c = ex ? Rational(em[m - 1], ex) : Rational(0);
        out.c_m.push_back(c);
        if (c > eta) {
            out.level_set.push_back(m);
            level.insert(m);
        }
    }
    out.max_gap = syndeticity_gap(level);
    out.level_density = Rational(out.level_set.size(), m_max);
    return out;
}

}  // namespace reclab
