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

#include "reclab/witness.hpp"

#include <algorithm>
#include <bit>

#include "reclab/errors.hpp"

namespace reclab {

namespace {

bool dense_enough(std::size_t size, u64 m, const Rational& delta) {
    return Rational(size) > delta * Rational(m);
}

// Vertices are bit positions 0..n-1 standing for frame_lo + i.
class MaxIndependent {
public:
    MaxIndependent(std::size_t n, const std::vector<u64>& S) : n_(n), adj_(n, 0) {
        for (std::size_t i = 0; i < n; ++i)
            for (u64 s : S)
                if (s < n && i + s < n) {
                    adj_[i] |= u64{1} << (i + s);
                    adj_[i + s] |= u64{1} << i;
                }
    }

    u64 run() {
        const u64 all = n_ == 64 ? ~u64{0} : (u64{1} << n_) - 1;
        dfs(0, all);
        return best_;
    }

private:
    // greedy clique cover of P bounds any independent set inside it
    int cover_bound(u64 P) const {
        int cliques = 0;
        while (P) {
            const int v = std::countr_zero(P);
            u64 clique = u64{1} << v;
            u64 cand = P & adj_[v];
            while (cand) {
                const int u = std::countr_zero(cand);
                clique |= u64{1} << u;
                cand &= adj_[u];
            }
            P &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void dfs(u64 cur, u64 P) {
        const int size = std::popcount(cur);
        if (!P) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = cur;
            }
            return;
        }
        if (size + std::popcount(P) <= best_size_) return;
        if (size + cover_bound(P) <= best_size_) return;
        const int v = 63 - std::countl_zero(P);
        const u64 bit = u64{1} << v;
        dfs(cur | bit, P & ~bit & ~adj_[v]);
        dfs(cur, P & ~bit);
    }

    std::size_t n_;
    std::vector<u64> adj_;
    u64 best_ = 0;
    int best_size_ = -1;
};

}  // namespace

WitnessSearchResult witness_search(const std::vector<u64>& S_in, u64 m, const Rational& delta, u64 frame_lo) {
    if (frame_lo > 1) throw DomainError("witness frame must start at 0 or 1");
    std::vector<u64> S = S_in;
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());

    WitnessSearchResult res;
    res.exact = m <= kExactWitnessLimit;
    const bool has_zero = !S.empty() && S.front() == 0;
    const u64 reach = S.empty() ? 0 : 2 * S.back();
    if (has_zero || m < frame_lo || m - frame_lo < reach) {
        res.exact = true;  // no admissible point, the maximum is empty
    } else {
        const u64 top = m - reach;
        const std::size_t n = top - frame_lo + 1;
        if (res.exact) {
            const u64 mask = MaxIndependent(n, S).run();
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) res.best.push_back(frame_lo + i);
        } else {
            std::vector<char> taken(n, 0);
            for (std::size_t i = n; i-- > 0;) {
                bool ok = true;
                for (u64 s : S)
                    if (i + s < n && taken[i + s]) ok = false;
                if (ok) taken[i] = 1;
            }
            for (std::size_t i = 0; i < n; ++i)
                if (taken[i]) res.best.push_back(frame_lo + i);
        }
    }
    if (dense_enough(res.best.size(), m, delta)) res.witness = Witness{res.best, m, delta, frame_lo};
    return res;
}

std::vector<i64> scale_witness(const std::vector<i64>& S, i64 m_divisor) {
    if (m_divisor == 0) throw DomainError("divisor must be nonzero");
    std::vector<i64> out;
    for (i64 s : S)
        if (s % m_divisor == 0) out.push_back(s / m_divisor);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace reclab
