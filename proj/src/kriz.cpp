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

#include "reclab/kriz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "reclab/errors.hpp"

namespace reclab {

using ojson = nlohmann::ordered_json;

KneserReport kneser_bound_check(unsigned d, unsigned k, const ChromaticOptions& opt) {
    if (d == 0) throw DomainError("dimension must be positive");
    if (d > 14) throw BudgetError("dimension above 14 exceeds the vertex guard", 14);
    KneserReport rep;
    rep.d = d;
    rep.k = k;
    rep.bound = 2 * k + 1;
    const HammingSpace space{d};
    const std::vector<u64> gens = hamming_ball(space, std::min(2 * k + 1, d), space.all_ones());
    rep.generators = gens.size();
    if (d <= 2 * k + 1) {
        rep.degenerate = true;
        rep.note = "degenerate: weight(1...1) = " + std::to_string(d) + " <= " + std::to_string(2 * k + 1) +
                   ", so 0 lies in H_" + std::to_string(2 * k + 1) + "(1) and the Cayley graph has self-loops";
        return rep;
    }
    rep.chromatic = chromatic_number(cayley_f2(d, gens), opt);
    rep.pass = rep.chromatic.lower_bound >= rep.bound;
    rep.note = rep.chromatic.exact ? "exact chromatic number" : "lower bound from clique or odd cycle";
    return rep;
}

RationalTorusPoint::RationalTorusPoint(std::vector<Rational> c) : coords(std::move(c)) {
    if (coords.empty()) throw DomainError("torus point needs at least one coordinate");
    BigInt common = 1;
    for (const Rational& q : coords) {
        if (q < 0 || q >= 1) throw DomainError("torus coordinate " + to_string(q) + " outside [0, 1)");
        const BigInt den = boost::multiprecision::denominator(q);
        common = common / boost::multiprecision::gcd(common, den) * den;
        if (common > 1'000'000) throw DomainError("common denominator exceeds 10^6");
    }
}

RationalTorusPoint RationalTorusPoint::parse(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
    return RationalTorusPoint(std::move(c));
}

std::vector<i64> htilde(const RationalTorusPoint& alpha, unsigned k, const Rational& epsilon, i64 lo, i64 hi) {
    if (epsilon <= 0 || epsilon >= Rational(1, 4)) throw DomainError("epsilon must lie in (0, 1/4)");
    if (hi < lo) throw RangeError("empty n range");
    if (static_cast<u64>(hi - lo) > 100'000'000) throw BudgetError("n range above 10^8 points", 100'000'000);
    struct Coord {
        i64 a, q;
    };
    std::vector<Coord> cs;
    for (const Rational& r : alpha.coords)
        cs.push_back({static_cast<i64>(boost::multiprecision::numerator(r)),
                      static_cast<i64>(boost::multiprecision::denominator(r))});
    const __int128 en = static_cast<i64>(boost::multiprecision::numerator(epsilon));
    const __int128 ed = static_cast<i64>(boost::multiprecision::denominator(epsilon));
    std::vector<i64> out;
    for (i64 n = lo; n <= hi; ++n) {
        unsigned near_zero = 0;
        bool ok = true;
        for (const Coord& c : cs) {
            __int128 r = (static_cast<__int128>(n) * c.a) % c.q;
            if (r < 0) r += c.q;
            // distance to 0 is min(r, q - r)/q, distance to 1/2 is |2r - q|/(2q)
            const __int128 d0 = std::min(r, c.q - r);
            const __int128 dh = r * 2 >= c.q ? r * 2 - c.q : c.q - r * 2;
            if (d0 * ed < en * c.q) {
                ++near_zero;
            } else if (!(dh * ed < en * 2 * c.q)) {
                ok = false;
                break;
            }
        }
        if (ok && near_zero <= k) out.push_back(n);
    }
    return out;
}

namespace {

std::vector<u64> sorted_unique(std::vector<u64> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Greedy membership builder for a witness on [lo, hi] avoiding differences T.
class WitnessBuilder {
public:
    WitnessBuilder(u64 lo, u64 hi, const std::vector<u64>& T)
        : lo_(lo), hi_(hi), T_(T), reach_(T.empty() ? 0 : 2 * T.back()), in_(hi - lo + 1, 0) {}

    bool admissible(u64 x) const {
        if (x < lo_ || x > hi_ || hi_ - x < reach_ || in_[x - lo_]) return false;
        for (u64 t : T_) {
            if (x >= lo_ + t && in_[x - t - lo_]) return false;
            if (x + t <= hi_ && in_[x + t - lo_]) return false;
        }
        return true;
    }
    bool try_add(u64 x) {
        if (!admissible(x)) return false;
        in_[x - lo_] = 1;
        ++size_;
        return true;
    }
    std::size_t size() const { return size_; }
    std::vector<u64> members() const {
        std::vector<u64> out;
        for (u64 i = 0; i < in_.size(); ++i)
            if (in_[i]) out.push_back(lo_ + i);
        return out;
    }

private:
    u64 lo_, hi_;
    const std::vector<u64>& T_;
    u64 reach_;
    std::vector<char> in_;
    std::size_t size_ = 0;
};

}  // namespace

ConcatResult concat_witness(const std::vector<u64>& S1, const Witness& w1, const std::vector<u64>& S2,
                            const Witness& w2, u64 l) {
    if (l < 2) throw DomainError("concatenation needs l >= 2");
    if (w1.m == 0 || w1.B.empty()) throw DomainError("first witness is empty");
    if (!verify_witness(S1, w1)) throw DomainError("first witness is not valid for S1");
    const u64 m = w1.m;
    ConcatResult res;
    std::vector<u64> T = S1;
    for (u64 s : S2) T.push_back(m * s);
    res.target = T = sorted_unique(T);
    const Rational delta = 2 * w1.delta * w2.delta;
    res.needed = delta * Rational(l * m);

    const u64 lo = w1.frame_lo, hi = l * m;
    WitnessBuilder build(lo, hi, T);
    for (u64 a : w1.B)
        if (!build.try_add(a)) return res;  // A itself clashes with m*S2 on this frame

    // block pattern J: B2 shifted to start at 0, repeated with period w2.m
    std::vector<u64> J;
    if (!w2.B.empty()) {
        const u64 b0 = w2.B.front();
        for (u64 base = 0; base < l; base += std::max<u64>(w2.m, 1)) {
            for (u64 b : w2.B)
                if (base + b - b0 < l) J.push_back(base + b - b0);
            if (w2.m == 0) break;
        }
    }
    J = sorted_unique(J);
    for (u64 j : J)
        for (u64 a : w1.B) build.try_add(a + j * m);
    res.seed_size = build.size();
    for (u64 x = lo; x <= hi; ++x) build.try_add(x);
    res.size = build.size();
    if (!(Rational(res.size) > res.needed)) return res;
    Witness w{build.members(), hi, delta, lo};
    if (!verify_witness(T, w)) throw VerificationError("concatenated witness failed the independent checker");
    res.witness = std::move(w);
    return res;
}

namespace {

// s in E - E, witnessed inside the window.
bool difference_on_window(const Window& e, u64 s) {
    bool found = false;
    e.for_each([&](u64 x) {
        if (!found && x <= e.hi() - s && e.contains(x + s)) found = true;
    });
    return found;
}

}  // namespace

CertificateReport chromatic_intersectivity_certificate(const SetFamily& E, const std::vector<u64>& S, unsigned k,
                                                       u64 lo, u64 hi, const ChromaticOptions& opt) {
    if (hi < lo) throw RangeError("empty window");
    CertificateReport rep;
    const std::vector<u64> verts = family_window(E, lo, hi).members();
    rep.vertices = verts.size();
    if (verts.size() > kMaxGraphVertices)
        throw BudgetError("window holds " + std::to_string(verts.size()) + " members, above the 2^14 guard",
                          kMaxGraphVertices);
    rep.chromatic = chromatic_number(cayley_integer(verts, S), opt);
    rep.certified = rep.chromatic.lower_bound > k;
    if (rep.certified)
        rep.verdict = "certified " + std::to_string(k) + "-chromatically E-intersective";
    else
        rep.verdict = "inconclusive on window";
    return rep;
}

namespace {

std::vector<std::vector<u64>> candidate_sets(u64 cap, unsigned max_size) {
    std::vector<std::vector<u64>> out;
    for (unsigned size = 1; size <= max_size && size <= cap; ++size) {
        std::vector<u64> cur(size);
        std::iota(cur.begin(), cur.end(), u64{1});
        while (true) {
            out.push_back(cur);
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && cur[i] == cap - (size - 1 - i)) --i;
            if (i < 0) break;
            ++cur[i];
            for (unsigned j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

ojson rational_json(const Rational& r) { return to_string(r); }

struct RoundCheck {
    bool i = false, ii = false, iii = false;
    unsigned chi_lower = 0;
    u64 window_hi = 0;
};

RoundCheck check_conditions(const SetFamily& E, const std::vector<u64>& S, const std::vector<u64>& C, u64 m,
                            const Rational& delta, unsigned k, const AssemblyOptions& opt) {
    RoundCheck rc;
    rc.window_hi = std::max(opt.window_min, 4 * S.back());
    const Window e = family_window(E, 1, rc.window_hi);
    bool diffs = true;
    for (u64 s : S) diffs = diffs && difference_on_window(e, s);
    const CertificateReport cert =
        chromatic_intersectivity_certificate(E, S, k, 1, rc.window_hi, ChromaticOptions{opt.chromatic_nodes});
    rc.chi_lower = cert.chromatic.lower_bound;
    rc.i = diffs && cert.certified;
    rc.ii = verify_witness(S, Witness{C, m, delta, 0});
    rc.iii = true;
    const std::vector<u64> Ssorted = sorted_unique(S);
    for (u64 a : C)
        for (u64 b : C)
            if (a > b && std::binary_search(Ssorted.begin(), Ssorted.end(), a - b)) rc.iii = false;
    return rc;
}

ojson u64_list(const std::vector<u64>& v) { return ojson(v); }

}  // namespace

AssemblyResult assemble_separation(const SetFamily& E, const Rational& delta, unsigned rounds,
                                   const AssemblyOptions& opt) {
    if (delta <= 0 || delta >= Rational(1, 2)) throw DomainError("delta must lie in (0, 1/2)");
    if (rounds < 1 || rounds > 3) throw DomainError("rounds must lie in [1, 3]");
    AssemblyResult res;

    AssemblyRound cur;
    cur.k = 1;
    cur.S = {1};
    cur.C = {0};
    cur.m = 2;
    auto record_conditions = [&](AssemblyRound& r, const std::string& name, ojson params) {
        const RoundCheck rc = check_conditions(E, r.S, r.C, r.m, delta, r.k, opt);
        r.cond_i = rc.i;
        r.cond_ii = rc.ii;
        r.cond_iii = rc.iii;
        r.chi_lower = rc.chi_lower;
        params["k"] = r.k;
        params["S"] = u64_list(r.S);
        params["m"] = r.m;
        params["C_size"] = r.C.size();
        params["chi_lower_bound"] = rc.chi_lower;
        params["chromatic_window"] = ojson::array({1, rc.window_hi});
        params["condition_i"] = rc.i;
        params["condition_ii"] = rc.ii;
        params["condition_iii"] = rc.iii;
        res.transcript.push_back({{"name", name}, {"parameters", params}, {"verified", rc.i && rc.ii && rc.iii}});
        return rc.i && rc.ii && rc.iii;
    };
    if (!record_conditions(cur, "seed", ojson::object())) {
        res.failure = "seed conditions";
        res.rounds.push_back(cur);
        return res;
    }
    res.rounds.push_back(cur);

    for (unsigned k = 1; k < rounds; ++k) {
        const AssemblyRound& prev = res.rounds.back();
        const Rational density = Rational(prev.C.size(), prev.m);
        const Rational delta_k = (density + delta) / 2;
        const Rational eta_min = delta / (2 * delta_k);
        const Witness wk{prev.C, prev.m, delta_k, 0};

        std::optional<AssemblyRound> next;
        std::size_t tried = 0;
        for (const std::vector<u64>& cand : candidate_sets(opt.s_cap, opt.max_size)) {
            ++tried;
            // eta-non-intersectivity first: cheap, and it rules out most candidates
            std::optional<Witness> wit;
            for (u64 mp = 2 * cand.back() + 1; mp <= kExactWitnessLimit && !wit; ++mp) {
                WitnessSearchResult ws = witness_search(cand, mp, eta_min);
                if (ws.witness) wit = ws.witness;
            }
            if (!wit) continue;

            std::vector<u64> scaled;
            for (u64 s : cand) scaled.push_back(prev.m * s);
            const u64 whi = std::max(opt.window_min, 4 * scaled.back());
            const Window e = family_window(E, 1, whi);
            bool diffs = true;
            for (u64 s : scaled) diffs = diffs && difference_on_window(e, s);
            if (!diffs) continue;
            const CertificateReport cert = chromatic_intersectivity_certificate(
                E, scaled, k + 1, 1, whi, ChromaticOptions{opt.chromatic_nodes});
            if (!cert.certified) continue;

            const Rational observed = Rational(wit->B.size(), wit->m);
            const Rational eta = (eta_min + observed) / 2;
            Witness w2{wit->B, wit->m, eta, 1};
            if (!verify_witness(cand, w2)) throw VerificationError("witness failed the independent checker");

            std::optional<ConcatResult> joined;
            u64 l_used = 0;
            for (u64 l = 2; l <= opt.l_max; ++l) {
                ConcatResult cr = concat_witness(prev.S, wk, cand, w2, l);
                if (cr.witness) {
                    joined = std::move(cr);
                    l_used = l;
                    break;
                }
            }
            if (!joined) continue;

            res.transcript.push_back({{"name", "scaled-set-search"},
                                      {"parameters",
                                       {{"k", k + 1},
                                        {"candidates_tried", tried},
                                        {"S_prime", u64_list(cand)},
                                        {"scaled", u64_list(scaled)},
                                        {"chromatic_window", ojson::array({1, whi})},
                                        {"chi_lower_bound", cert.chromatic.lower_bound},
                                        {"chi_exact", cert.chromatic.exact}}},
                                      {"verified", cert.certified}});
            res.transcript.push_back({{"name", "witness-search"},
                                      {"parameters",
                                       {{"S_prime", u64_list(cand)},
                                        {"m_prime", w2.m},
                                        {"B_size", w2.B.size()},
                                        {"eta_min", rational_json(eta_min)},
                                        {"eta", rational_json(eta)}}},
                                      {"verified", true}});
            res.transcript.push_back({{"name", "concatenation"},
                                      {"parameters",
                                       {{"l", l_used},
                                        {"delta_k", rational_json(delta_k)},
                                        {"target", u64_list(joined->target)},
                                        {"seed_size", joined->seed_size},
                                        {"C_size", joined->size},
                                        {"needed", rational_json(joined->needed)}}},
                                      {"verified", true}});
            AssemblyRound r;
            r.k = k + 1;
            r.S = joined->target;
            r.C = joined->witness->B;
            r.m = joined->witness->m;
            next = r;
            break;
        }
        if (!next) {
            res.transcript.push_back({{"name", "scaled-set-search"},
                                      {"parameters",
                                       {{"k", k + 1},
                                        {"candidates_tried", tried},
                                        {"s_cap", opt.s_cap},
                                        {"max_size", opt.max_size},
                                        {"eta_min", rational_json(eta_min)},
                                        {"l_max", opt.l_max}}},
                                      {"verified", false}});
            res.failure = "scaled-set-search found no S' with a chromatic certificate, a witness and a "
                          "successful concatenation in round " +
                          std::to_string(k + 1);
            return res;
        }
        const bool ok = record_conditions(*next, "conditions", ojson::object());
        res.rounds.push_back(*next);
        if (!ok) {
            res.failure = "conditions failed in round " + std::to_string(k + 1);
            return res;
        }
    }
    res.completed = true;
    return res;
}

}  // namespace reclab
