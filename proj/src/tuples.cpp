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

#include "reclab/tuples.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "reclab/errors.hpp"
#include "reclab/kernels.hpp"
#include "reclab/parallel.hpp"

namespace reclab {

Tuple::Tuple(std::vector<i64> h) : offsets(std::move(h)) {
    if (offsets.empty()) throw DomainError("tuple needs at least one offset");
    std::sort(offsets.begin(), offsets.end());
    if (std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end())
        throw DomainError("tuple offsets must be distinct");
}

Tuple Tuple::parse(const std::string& text) {
    std::vector<i64> h;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            h.push_back(std::stoll(item, &used));
            if (used != item.size()) throw DomainError("bad tuple offset '" + item + "'");
        } catch (const std::logic_error&) {
            throw DomainError("bad tuple offset '" + item + "'");
        }
    }
    return Tuple(std::move(h));
}

bool is_admissible(const Tuple& H) {
    for (u64 p : primes_up_to(H.size())) {
        std::vector<char> seen(p, 0);
        std::size_t distinct = 0;
        for (i64 h : H.offsets) {
            const i64 r = floor_mod(h, static_cast<i64>(p));
            if (!seen[r]) {
                seen[r] = 1;
                ++distinct;
            }
        }
        if (distinct == p) return false;
    }
    return true;
}

Rational huang_wu_threshold(unsigned k) {
    Rational t = k;
    for (u64 p : primes_up_to(k)) t *= Rational(p, p - 1);
    return t;
}

Tuple huang_wu_extract(const std::vector<i64>& A_in, unsigned k) {
    if (k == 0) throw DomainError("k must be positive");
    std::vector<i64> B = A_in;
    std::sort(B.begin(), B.end());
    B.erase(std::unique(B.begin(), B.end()), B.end());
    const Rational need = huang_wu_threshold(k);
    if (Rational(B.size()) < need)
        throw DomainError("set too small: " + std::to_string(B.size()) + " elements, need at least " +
                          to_string(need) + " (about " + std::to_string(to_double(need)) + ")");
    for (u64 p : primes_up_to(k)) {
        std::vector<std::size_t> count(p, 0);
        for (i64 b : B) ++count[floor_mod(b, static_cast<i64>(p))];
        const auto drop = static_cast<i64>(std::min_element(count.begin(), count.end()) - count.begin());
        std::erase_if(B, [&](i64 b) { return floor_mod(b, static_cast<i64>(p)) == drop; });
    }
    if (B.size() < k) throw VerificationError("residue sieve left fewer than k elements");
    B.resize(k);
    Tuple out(B);
    if (!is_admissible(out)) throw VerificationError("extracted tuple is not admissible");
    return out;
}

namespace {

std::vector<u64> count_translates(const Window& e, const Tuple& H, unsigned r, u64 n_max) {
    constexpr u64 kSeg = u64{1} << 16;
    const u64 segments = (n_max + kSeg - 1) / kSeg;
    std::vector<std::vector<u64>> found(segments);
    const int threads = thread_cap();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (u64 s = 0; s < segments; ++s) {
        const u64 a = 1 + s * kSeg, b = std::min(n_max, (s + 1) * kSeg);
        for (u64 n = a; n <= b; ++n) {
            unsigned hits = 0;
            for (i64 h : H.offsets) {
                const i64 x = static_cast<i64>(n) + h;
                if (x >= 0 && e.contains(static_cast<u64>(x))) ++hits;
            }
            if (hits >= r) found[s].push_back(n);
        }
    }
    std::vector<u64> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    return out;
}

u64 window_top(const Tuple& H, u64 n_max) {
    const i64 top = static_cast<i64>(n_max) + H.offsets.back();
    return top < 0 ? 0 : static_cast<u64>(top);
}

}  // namespace

std::vector<u64> translate_search(const Tuple& H, unsigned r, u64 n_max) {
    if (r > H.size()) throw DomainError("r exceeds the tuple size");
    if (n_max > 100'000'000) throw BudgetError("n_max above 10^8", 100'000'000);
    if (n_max == 0) return {};
    return count_translates(kernels::sieve_primes(window_top(H, n_max)), H, r, n_max);
}

namespace {

u64 binomial_capped(u64 n, u64 k, u64 cap) {
    if (k > n) return 0;
    u128 c = 1;
    for (u64 i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap) return cap + 1;
    }
    return static_cast<u64>(c);
}

}  // namespace

DeltaStarReport delta_star_certify(const Window& diffs, unsigned r, u64 probe_span, u64 trials, u64 seed) {
    if (r < 2) throw DomainError("r must be at least 2");
    if (r > 12) throw BudgetError("r above 12", 12);
    DeltaStarReport rep;
    rep.r = r;
    rep.probe_span = std::min(probe_span, diffs.hi());
    const u64 span = rep.probe_span;
    auto in_diffs = [&](u64 d) { return diffs.contains(d); };
    if (span + 1 < r) {
        rep.exhaustive = true;
        rep.verdict = "no violation found (probe span holds fewer than r points)";
        return rep;
    }
    rep.exhaustive = binomial_capped(span + 1, r, 10'000'000) <= 10'000'000;
    if (rep.exhaustive) {
        // translates of S share S - S, so fix min S = 0
        std::vector<u64> S{0};
        auto dfs = [&](auto&& self, u64 from) -> bool {
            ++rep.explored;
            if (S.size() == r) return true;
            for (u64 x = from; x <= span; ++x) {
                if (span - x < r - S.size() - 1) break;
                bool clash = false;
                for (u64 s : S)
                    if (in_diffs(x - s)) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                S.push_back(x);
                if (self(self, x + 1)) return true;
                S.pop_back();
            }
            return false;
        };
        if (dfs(dfs, 1)) rep.violation = S;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<u64> pick(1, span);
        for (u64 t = 0; t < trials && !rep.violation; ++t) {
            ++rep.explored;
            std::set<u64> chosen{0};
            while (chosen.size() < r) chosen.insert(pick(rng));
            const std::vector<u64> S(chosen.begin(), chosen.end());
            bool clash = false;
            for (std::size_t i = 0; i < S.size() && !clash; ++i)
                for (std::size_t j = i + 1; j < S.size() && !clash; ++j) clash = in_diffs(S[j] - S[i]);
            if (!clash) rep.violation = S;
        }
    }
    if (rep.violation)
        rep.verdict = "violation certificate: not a Delta*_" + std::to_string(r) + " set on the probe range";
    else
        rep.verdict = rep.exhaustive ? "no violation found (exhaustive on the probe range)"
                                     : "no violation found (sampled)";
    return rep;
}

CoverReport syndeticity_index_cover(const Window& A, unsigned r_bound) {
    const std::vector<u64> members = A.members();
    if (members.empty()) throw DomainError("A is empty");
    CoverReport rep;
    const u64 t1 = 1;
    rep.checked_hi = t1 + members.back();
    std::vector<char> covered(rep.checked_hi + 1, 0);
    auto place = [&](u64 t) {
        rep.translates.push_back(t);
        for (u64 a : members)
            if (t + a <= rep.checked_hi) covered[t + a] = 1;
    };
    place(t1);
    u64 t = t1;
    while (true) {
        u64 next = t + 1;
        while (next <= rep.checked_hi && covered[next]) ++next;
        if (next > rep.checked_hi) break;
        if (rep.translates.size() >= r_bound) {
            rep.threshold = t;
            rep.within_bound = false;
            rep.verdict = "index exceeds bound on window";
            return rep;
        }
        place(next);
        t = next;
    }
    rep.threshold = t;
    rep.within_bound = true;
    // independent recheck of the residual window
    rep.verified = true;
    for (u64 n = rep.threshold + 1; n <= rep.checked_hi && rep.verified; ++n) {
        bool hit = false;
        for (u64 ti : rep.translates)
            if (n > ti && A.contains(n - ti)) {
                hit = true;
                break;
            }
        rep.verified = hit;
    }
    rep.verdict = "index " + std::to_string(rep.translates.size()) + " on window";
    return rep;
}

PigeonholeReport partition_pigeonhole_check(const SetFamily& E, const std::map<u64, unsigned>& coloring,
                                            const Tuple& H, u64 n_max) {
    PigeonholeReport rep;
    if (coloring.empty()) throw DomainError("coloring is empty");
    for (const auto& [n, c] : coloring) {
        if (c == 0) throw DomainError("colours start at 1");
        rep.colors = std::max(rep.colors, c);
    }
    if (rep.colors + 1 > H.size()) throw DomainError("tuple too short for colours + 1 members");
    if (n_max > 100'000'000) throw BudgetError("n_max above 10^8", 100'000'000);
    const Window e = family_window(E, 0, window_top(H, n_max));
    e.for_each([&](u64 x) {
        if (x >= 1 && !coloring.count(x)) throw DomainError("coloring has no value for " + std::to_string(x));
    });
    rep.translates = count_translates(e, H, rep.colors + 1, n_max);
    std::set<i64> hdiff;
    for (i64 a : H.offsets)
        for (i64 b : H.offsets)
            if (a < b) hdiff.insert(b - a);
    for (u64 n : rep.translates) {
        std::map<unsigned, std::pair<i64, u64>> first_of_color;
        for (i64 h : H.offsets) {
            const i64 x = static_cast<i64>(n) + h;
            if (x < 1 || !e.contains(static_cast<u64>(x))) continue;
            const unsigned c = coloring.at(static_cast<u64>(x));
            const auto it = first_of_color.find(c);
            if (it == first_of_color.end()) {
                first_of_color[c] = {h, static_cast<u64>(x)};
                continue;
            }
            PigeonholeHit hit;
            hit.n = n;
            hit.h_low = it->second.first;
            hit.low = it->second.second;
            hit.h_high = h;
            hit.high = static_cast<u64>(x);
            hit.color = c;
            hit.difference = h - hit.h_low;
            hit.in_H_minus_H = hdiff.count(hit.difference) && hit.high - hit.low == static_cast<u64>(hit.difference);
            rep.hits.push_back(hit);
            break;
        }
    }
    if (rep.hits.size() != rep.translates.size())
        throw VerificationError("pigeonhole failed to find a monochromatic pair");
    return rep;
}

std::map<u64, unsigned> parse_coloring(const std::string& text) {
    std::map<u64, unsigned> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        u64 n;
        unsigned c;
        if (!(ls >> n)) continue;
        if (!(ls >> c)) throw DomainError("coloring line " + std::to_string(lineno) + " lacks a colour");
        out[n] = c;
    }
    return out;
}

}  // namespace reclab
