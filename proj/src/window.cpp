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

#include "reclab/window.hpp"

#include <algorithm>

#include "bits_internal.hpp"
#include "reclab/errors.hpp"
#include "reclab/kernels.hpp"

namespace reclab {

Window::Window(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
    if (hi < lo) throw DomainError("window hi < lo");
    const u64 bits = hi - lo + 1;
    if (bits == 0 || bits > kWindowBitBudget) throw BudgetError("window too large", kWindowBitBudget);
    words_.assign((bits + 63) / 64, 0);
}

Window Window::from_members(u64 lo, u64 hi, std::span<const u64> members) {
    Window w(lo, hi);
    for (u64 m : members) {
        if (m < lo || m > hi) throw RangeError("member " + std::to_string(m) + " outside window");
        w.insert(m);
    }
    return w;
}

Window Window::full(u64 lo, u64 hi) {
    Window w(lo, hi);
    std::fill(w.words_.begin(), w.words_.end(), ~u64{0});
    w.clear_tail();
    return w;
}

void Window::clear_tail() {
    const u64 bits = span_size();
    const u64 rem = bits & 63;
    if (rem) words_.back() &= (u64{1} << rem) - 1;
}

void Window::insert(u64 n) {
    if (n < lo_ || n > hi_) throw RangeError("insert outside window: " + std::to_string(n));
    const u64 i = n - lo_;
    words_[i >> 6] |= u64{1} << (i & 63);
}

void Window::erase(u64 n) {
    if (n < lo_ || n > hi_) return;
    const u64 i = n - lo_;
    words_[i >> 6] &= ~(u64{1} << (i & 63));
}

u64 Window::count() const { return detail::popcount_all(words_); }

u64 Window::count_range(u64 a, u64 b) const {
    a = std::max(a, lo_);
    b = std::min(b, hi_);
    if (a > b) return 0;
    const u64 i0 = a - lo_, i1 = b - lo_;
    const u64 w0 = i0 >> 6, w1 = i1 >> 6;
    auto mask_from = [](u64 bit) { return ~u64{0} << bit; };
    auto mask_to = [](u64 bit) { return bit == 63 ? ~u64{0} : (u64{1} << (bit + 1)) - 1; };
    if (w0 == w1) return std::popcount(words_[w0] & mask_from(i0 & 63) & mask_to(i1 & 63));
    u64 c = std::popcount(words_[w0] & mask_from(i0 & 63));
    for (u64 w = w0 + 1; w < w1; ++w) c += std::popcount(words_[w]);
    c += std::popcount(words_[w1] & mask_to(i1 & 63));
    return c;
}

std::vector<u64> Window::members() const {
    std::vector<u64> out;
    out.reserve(count());
    for_each([&](u64 n) { out.push_back(n); });
    return out;
}

std::optional<u64> Window::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return lo_ + (static_cast<u64>(w) << 6) + std::countr_zero(words_[w]);
    return std::nullopt;
}

std::optional<u64> Window::last() const {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return lo_ + (static_cast<u64>(w) << 6) + 63 - std::countl_zero(words_[w]);
    return std::nullopt;
}

Window Window::rebased(u64 lo, u64 hi) const {
    Window out(lo, hi);
    const i64 shift = static_cast<i64>(lo) - static_cast<i64>(lo_);
    const i64 nbits = static_cast<i64>(span_size());
    for (std::size_t w = 0; w < out.words_.size(); ++w)
        out.words_[w] = detail::load64(words_, nbits, static_cast<i64>(w) * 64 + shift);
    out.clear_tail();
    return out;
}

bool Window::subset_of(const Window& other) const {
    bool ok = true;
    for_each([&](u64 n) {
        if (ok && !other.contains(n)) ok = false;
    });
    return ok;
}

namespace {
void require_same_range(const Window& a, const Window& b) {
    if (a.lo() != b.lo() || a.hi() != b.hi()) throw DomainError("window ranges differ");
}
}  // namespace

Window& Window::operator&=(const Window& other) {
    require_same_range(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

Window& Window::operator|=(const Window& other) {
    require_same_range(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Window& Window::subtract(const Window& other) {
    require_same_range(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

Window operator&(Window a, const Window& b) { return a &= b; }
Window operator|(Window a, const Window& b) { return a |= b; }
Window set_minus(Window a, const Window& b) { return a.subtract(b); }

Window translated(const Window& w, i64 delta) {
    Window out(w.lo(), w.hi());
    const i64 nbits = static_cast<i64>(w.span_size());
    auto& ow = out.mutable_words();
    for (std::size_t i = 0; i < ow.size(); ++i)
        ow[i] = detail::load64(w.words(), nbits, static_cast<i64>(i) * 64 - delta);
    if (const u64 rem = w.span_size() & 63) ow.back() &= (u64{1} << rem) - 1;
    return out;
}

u64 shifted_overlap(const Window& a, const Window& b, u64 shift) {
    const u64 s[1] = {shift};
    return kernels::serial::shifted_overlaps(a, b, s)[0];
}

DifferenceSet difference_set(const Window& a, const Window& b, u64 cap) {
    if (cap == 0) throw DomainError("range_cap must be positive");
    if (a.hi() > b.lo() && cap > a.hi() - b.lo())
        throw DomainError("range_cap exceeds a.hi - b.lo");
    DifferenceSet out{Window(1, cap), false};
    if (a.empty() || b.empty()) return out;
    out.positive = kernels::difference_bits(a, b, cap);
    const u64 lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
    if (lo <= hi) out.zero_present = (a.rebased(lo, hi) & b.rebased(lo, hi)).count() > 0;
    return out;
}

std::optional<u64> syndeticity_gap(const Window& w) {
    if (w.empty()) return std::nullopt;
    u64 prev = w.lo() - 1;  // virtual member; wraps harmlessly when lo == 0
    u64 best = 0;
    w.for_each([&](u64 n) {
        best = std::max(best, n - prev);
        prev = n;
    });
    best = std::max(best, w.hi() + 1 - prev);
    return best;
}

namespace {
u64 longest_run(const Window& w, bool present) {
    u64 best = 0, cur = 0;
    for (u64 n = w.lo();; ++n) {
        if (w.contains(n) == present)
            best = std::max(best, ++cur);
        else
            cur = 0;
        if (n == w.hi()) break;
    }
    return best;
}
}  // namespace

u64 longest_run_present(const Window& w) { return longest_run(w, true); }
u64 longest_run_absent(const Window& w) { return longest_run(w, false); }

BanachPoint banach_window_max(const Window& e, u64 length) {
    if (length == 0) throw DomainError("window length must be positive");
    BanachPoint p{length, 0, e.lo(), Rational(0)};
    if (length > e.span_size()) length = e.span_size();
    // sliding count over [start, start + length)
    u64 cur = e.count_range(e.lo(), e.lo() + length - 1);
    p.best_count = cur;
    for (u64 start = e.lo() + 1; start + length - 1 <= e.hi(); ++start) {
        if (e.contains(start - 1)) --cur;
        if (e.contains(start + length - 1)) ++cur;
        if (cur > p.best_count) {
            p.best_count = cur;
            p.best_start = start;
        }
    }
    p.ratio = Rational(p.best_count, p.length);
    return p;
}

DensityStats density_stats(const Window& e, const Window& a, std::span<const u64> sample_ns) {
    if (!a.subset_of(e)) throw DomainError("A is not a subset of E");
    DensityStats st;
    bool first = true;
    for (u64 n : sample_ns) {
        const u64 ec = e.count_range(e.lo(), n);
        if (ec == 0) continue;
        const Rational r(a.count_range(a.lo(), n), ec);
        st.prefix_ratios.emplace_back(n, r);
        if (first || r > st.upper_rel) st.upper_rel = r;
        if (first || r < st.lower_rel) st.lower_rel = r;
        first = false;
        st.banach_profile.push_back(banach_window_max(e, n));
    }
    return st;
}

u64 representation_count(const Window& e, u64 a) {
    if (a == 0) throw DomainError("difference must be positive");
    if (a > e.hi() - e.lo()) return 0;
    return shifted_overlap(e, e, a);
}

}  // namespace reclab
