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

#include "reclab/kernels.hpp"

#include <omp.h>

#include <algorithm>

#include "bits_internal.hpp"
#include "reclab/errors.hpp"
#include "reclab/parallel.hpp"

namespace reclab::kernels {

namespace {

using detail::load64;

constexpr u64 kSegmentBits = u64{1} << 18;

void mask_last_word(std::vector<u64>& words, u64 nbits) {
    const u64 rem = nbits & 63;
    if (rem) words.back() &= (u64{1} << rem) - 1;
}

Window sieve_impl(u64 hi, int threads) {
    Window out(0, hi);
    auto& words = out.mutable_words();
    const std::vector<u64> base = primes_up_to(isqrt(hi));
    const u64 nbits = hi + 1;
    const i64 nseg = static_cast<i64>((nbits + kSegmentBits - 1) / kSegmentBits);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
    for (i64 seg = 0; seg < nseg; ++seg) {
        const u64 s = static_cast<u64>(seg) * kSegmentBits;
        const u64 e = std::min(nbits, s + kSegmentBits);
        std::fill(words.begin() + s / 64, words.begin() + (e + 63) / 64, ~u64{0});
        for (u64 p : base) {
            u64 start = std::max(p * p, (s + p - 1) / p * p);
            for (u64 n = start; n < e; n += p) words[n >> 6] &= ~(u64{1} << (n & 63));
        }
    }
    mask_last_word(words, nbits);
    words[0] &= ~u64{3};
    return out;
}

Window difference_impl(const Window& a, const Window& b, u64 cap, int threads) {
    Window out(1, cap);
    auto& ow = out.mutable_words();
    const std::vector<u64> ys = b.members();
    const auto& aw = a.words();
    const i64 anbits = static_cast<i64>(a.span_size());
    const i64 nwords = static_cast<i64>(ow.size());
    // Output words are split across threads; each thread ORs every shift into its own words.
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (i64 w = 0; w < nwords; ++w) {
        u64 acc = 0;
        for (u64 y : ys) {
            // bit j of word w is difference d = 64w + j + 1, i.e. x = y + d
            const i64 pos = static_cast<i64>(y) + 1 + 64 * w - static_cast<i64>(a.lo());
            if (pos >= anbits) break;
            acc |= load64(aw, anbits, pos);
        }
        ow[w] = acc;
    }
    mask_last_word(ow, cap);
    return out;
}

u64 overlap_one(const Window& a, const Window& b, u64 shift) {
    const auto& aw = a.words();
    const auto& bw = b.words();
    const i64 bnbits = static_cast<i64>(b.span_size());
    const i64 base = static_cast<i64>(a.lo()) + static_cast<i64>(shift) - static_cast<i64>(b.lo());
    u64 c = 0;
    for (std::size_t w = 0; w < aw.size(); ++w) {
        if (!aw[w]) continue;
        const i64 pos = base + 64 * static_cast<i64>(w);
        if (pos >= bnbits) break;
        c += std::popcount(aw[w] & load64(bw, bnbits, pos));
    }
    return c;
}

std::vector<u64> overlaps_impl(const Window& a, const Window& b, std::span<const u64> shifts, int threads) {
    std::vector<u64> out(shifts.size());
    const i64 n = static_cast<i64>(shifts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
    for (i64 i = 0; i < n; ++i) out[i] = overlap_one(a, b, shifts[i]);
    return out;
}

// Pairwise sum in a fixed tree shape, independent of the thread count.
Complex tree_sum(std::vector<Complex> v) {
    if (v.empty()) return {};
    while (v.size() > 1) {
        const std::size_t half = (v.size() + 1) / 2;
        for (std::size_t i = 0; i < v.size() / 2; ++i) v[i] = v[2 * i] + v[2 * i + 1];
        if (v.size() & 1) v[v.size() / 2] = v.back();
        v.resize(half);
    }
    return v[0];
}

Complex gowers_partial(std::span<const Complex> f, int k, std::size_t x) {
    const std::size_t n = f.size();
    const std::size_t verts = std::size_t{1} << k;
    std::vector<std::size_t> h(k, 0);
    std::vector<std::size_t> off(verts);
    Complex acc = 0;
    while (true) {
        off[0] = x;
        for (int j = 0; j < k; ++j) {
            const std::size_t bit = std::size_t{1} << j;
            for (std::size_t w = 0; w < bit; ++w) off[w | bit] = (off[w] + h[j]) % n;
        }
        Complex prod = 1;
        for (std::size_t w = 0; w < verts; ++w) {
            const Complex v = f[off[w]];
            prod *= (std::popcount(w) & 1) ? std::conj(v) : v;
        }
        acc += prod;
        int j = 0;
        while (j < k && ++h[j] == n) h[j++] = 0;
        if (j == k) break;
    }
    return acc;
}

Complex gowers_impl(std::span<const Complex> f, int k, int threads) {
    if (k < 1 || k > 6) throw DomainError("gowers order out of range");
    if (f.empty()) throw DomainError("empty function");
    std::vector<Complex> partial(f.size());
    const i64 n = static_cast<i64>(f.size());
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
    for (i64 x = 0; x < n; ++x) partial[x] = gowers_partial(f, k, static_cast<std::size_t>(x));
    return tree_sum(std::move(partial));
}

std::vector<std::pair<u64, u64>> edges_impl(const Window& e, std::span<const Interval> r, int threads) {
    const std::vector<u64> mem = e.members();
    std::vector<std::vector<std::pair<u64, u64>>> per(mem.size());
    const i64 n = static_cast<i64>(mem.size());
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) if (threads > 1)
    for (i64 i = 0; i < n; ++i) {
        const u64 a = mem[i];
        auto& out = per[i];
        for (const Interval& iv : r) {
            if (iv.lo == 0 || iv.lo > a - e.lo()) continue;
            const u64 bhi = a - iv.lo;
            const u64 blo = iv.hi >= a - e.lo() ? e.lo() : a - iv.hi;
            for (u64 b = blo; b <= bhi; ++b)
                if (e.contains(b)) out.emplace_back(a, b);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    std::vector<std::pair<u64, u64>> all;
    for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
    return all;
}

// Does e meet s + ([m_lo, m_hi] ∩ allowed)?
bool any_hit(const Window& e, u64 s, u64 m_lo, u64 m_hi, const Window* allowed) {
    if (!allowed) return e.count_range(s + m_lo, s + m_hi) > 0;
    const u64 lo = std::max(m_lo, allowed->lo());
    const u64 hi = std::min(m_hi, allowed->hi());
    if (lo > hi) return false;
    const auto& aw = allowed->words();
    const i64 enbits = static_cast<i64>(e.span_size());
    const u64 w0 = (lo - allowed->lo()) / 64, w1 = (hi - allowed->lo()) / 64;
    for (u64 w = w0; w <= w1; ++w) {
        u64 word = aw[w];
        const u64 first = allowed->lo() + 64 * w;
        if (first < lo) word &= ~u64{0} << (lo - first);
        if (first + 63 > hi) word &= (u64{1} << (hi - first + 1)) - 1;
        if (!word) continue;
        const i64 pos = static_cast<i64>(s + first) - static_cast<i64>(e.lo());
        if (word & load64(e.words(), enbits, pos)) return true;
    }
    return false;
}

CSieveResult c_sieve_impl(const Window& e, std::span<const SieveRule> rules, const Window* allowed, int threads) {
    CSieveResult res{Window(e.lo(), e.hi()), Window(e.lo(), e.hi())};
    auto& kw = res.kept.mutable_words();
    auto& pw = res.provisional.mutable_words();
    const auto& ew = e.words();
    const i64 nwords = static_cast<i64>(ew.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (threads > 1)
    for (i64 w = 0; w < nwords; ++w) {
        u64 bits = ew[w], kept = 0, prov = 0;
        while (bits) {
            const int j = std::countr_zero(bits);
            bits &= bits - 1;
            const u64 s = e.lo() + 64 * static_cast<u64>(w) + static_cast<u64>(j);
            bool excluded = false, partial = false;
            for (const SieveRule& rule : rules) {
                if (s < rule.s_min) continue;
                if (any_hit(e, s, rule.m_lo, rule.m_hi, allowed)) {
                    excluded = true;
                    break;
                }
                if (s > e.hi() - std::min(e.hi(), rule.m_hi)) partial = true;
            }
            if (!excluded) {
                kept |= u64{1} << j;
                if (partial) prov |= u64{1} << j;
            }
        }
        kw[w] = kept;
        pw[w] = prov;
    }
    return res;
}

int threads_now() { return std::max(1, thread_cap()); }

}  // namespace

namespace serial {
Window sieve_primes(u64 hi) { return sieve_impl(hi, 1); }
Window difference_bits(const Window& a, const Window& b, u64 cap) { return difference_impl(a, b, cap, 1); }
std::vector<u64> shifted_overlaps(const Window& a, const Window& b, std::span<const u64> shifts) {
    return overlaps_impl(a, b, shifts, 1);
}
Complex gowers_sum(std::span<const Complex> f, int k) { return gowers_impl(f, k, 1); }
std::vector<std::pair<u64, u64>> conflict_edges(const Window& e, std::span<const Interval> r) {
    return edges_impl(e, r, 1);
}
CSieveResult c_sieve(const Window& e, std::span<const SieveRule> rules, const Window* allowed_offsets) {
    return c_sieve_impl(e, rules, allowed_offsets, 1);
}
}  // namespace serial

namespace parallel {
Window sieve_primes(u64 hi) { return sieve_impl(hi, threads_now()); }
Window difference_bits(const Window& a, const Window& b, u64 cap) {
    return difference_impl(a, b, cap, threads_now());
}
std::vector<u64> shifted_overlaps(const Window& a, const Window& b, std::span<const u64> shifts) {
    return overlaps_impl(a, b, shifts, threads_now());
}
Complex gowers_sum(std::span<const Complex> f, int k) { return gowers_impl(f, k, threads_now()); }
std::vector<std::pair<u64, u64>> conflict_edges(const Window& e, std::span<const Interval> r) {
    return edges_impl(e, r, threads_now());
}
CSieveResult c_sieve(const Window& e, std::span<const SieveRule> rules, const Window* allowed_offsets) {
    return c_sieve_impl(e, rules, allowed_offsets, threads_now());
}
}  // namespace parallel

#define RECLAB_DISPATCH(call) (thread_cap() <= 1 ? serial::call : parallel::call)

Window sieve_primes(u64 hi) { return RECLAB_DISPATCH(sieve_primes(hi)); }
Window difference_bits(const Window& a, const Window& b, u64 cap) {
    return RECLAB_DISPATCH(difference_bits(a, b, cap));
}
std::vector<u64> shifted_overlaps(const Window& a, const Window& b, std::span<const u64> shifts) {
    return RECLAB_DISPATCH(shifted_overlaps(a, b, shifts));
}
Complex gowers_sum(std::span<const Complex> f, int k) { return RECLAB_DISPATCH(gowers_sum(f, k)); }
std::vector<std::pair<u64, u64>> conflict_edges(const Window& e, std::span<const Interval> r) {
    return RECLAB_DISPATCH(conflict_edges(e, r));
}
CSieveResult c_sieve(const Window& e, std::span<const SieveRule> rules, const Window* allowed_offsets) {
    return RECLAB_DISPATCH(c_sieve(e, rules, allowed_offsets));
}

#undef RECLAB_DISPATCH

}  // namespace reclab::kernels
