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

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reclab/arith.hpp"

namespace reclab {

// Largest bit span a single Window may allocate (1 GiB of words).
inline constexpr u64 kWindowBitBudget = u64{1} << 33;

// A finite set of non-negative integers inside the closed range [lo, hi],
// stored as a bit array (bit i <-> lo + i).
class Window {
public:
    Window() : Window(0, 0) {}
    Window(u64 lo, u64 hi);

    static Window from_members(u64 lo, u64 hi, std::span<const u64> members);
    static Window full(u64 lo, u64 hi);

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }
    u64 span_size() const { return hi_ - lo_ + 1; }

    bool contains(u64 n) const {
        if (n < lo_ || n > hi_) return false;
        const u64 i = n - lo_;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void insert(u64 n);
    void erase(u64 n);

    u64 count() const;
    // |W ∩ [a, b]|, clipped to the window.
    u64 count_range(u64 a, u64 b) const;
    bool empty() const { return count() == 0; }

    std::vector<u64> members() const;
    std::optional<u64> first() const;
    std::optional<u64> last() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            u64 bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(lo_ + (static_cast<u64>(w) << 6) + static_cast<u64>(b));
                bits &= bits - 1;
            }
        }
    }

    // Same members, different (enclosing or narrower) range. Members outside
    // the new range are dropped.
    Window rebased(u64 lo, u64 hi) const;

    bool subset_of(const Window& other) const;

    const std::vector<u64>& words() const { return words_; }
    std::vector<u64>& mutable_words() { return words_; }

    friend bool operator==(const Window& a, const Window& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.words_ == b.words_;
    }

    // In-place set algebra; both windows must share the same range.
    Window& operator&=(const Window& other);
    Window& operator|=(const Window& other);
    Window& subtract(const Window& other);

private:
    void clear_tail();

    u64 lo_;
    u64 hi_;
    std::vector<u64> words_;
};

Window operator&(Window a, const Window& b);
Window operator|(Window a, const Window& b);
Window set_minus(Window a, const Window& b);

// {x + delta : x in w} clipped to w's own range.
Window translated(const Window& w, i64 delta);

// #{x in a : x + shift in b}.
u64 shifted_overlap(const Window& a, const Window& b, u64 shift);

struct DifferenceSet {
    Window positive;  // range [1, cap]
    bool zero_present;
};

// {x - y > 0 : x in a, y in b, x - y <= cap}; zero reported separately.
DifferenceSet difference_set(const Window& a, const Window& b, u64 cap);

// Largest gap between consecutive members, treating lo-1 and hi+1 as members.
// None for an empty window. A full interval gives 1.
std::optional<u64> syndeticity_gap(const Window& w);

u64 longest_run_present(const Window& w);
u64 longest_run_absent(const Window& w);

struct BanachPoint {
    u64 length;
    u64 best_count;
    u64 best_start;
    Rational ratio;
};

struct DensityStats {
    std::vector<std::pair<u64, Rational>> prefix_ratios;  // (N, |A∩[lo,N]| / |E∩[lo,N]|)
    Rational upper_rel;
    Rational lower_rel;
    std::vector<BanachPoint> banach_profile;  // of E, start ranges only over the window
    bool banach_truncated_to_window = true;
};

// Relative densities of A inside E at each prefix end in sample_ns, and the
// exact sliding-window Banach profile of E at each length in sample_ns.
DensityStats density_stats(const Window& e, const Window& a, std::span<const u64> sample_ns);

BanachPoint banach_window_max(const Window& e, u64 length);

// Ordered pairs (s1, s2) of members with s1 - s2 = a.
u64 representation_count(const Window& e, u64 a);

// Serialisation. The binary format is run-length encoded:
//   "RLW1" | lo (u64 LE) | hi (u64 LE) | run count (LEB128) | runs (LEB128)
// runs alternate absent/present starting with absent; they sum to hi-lo+1.
std::string to_rle_binary(const Window& w);
Window from_rle_binary(const std::string& bytes);

// "# window <lo> <hi>" header then one decimal member per line.
std::string to_text(const Window& w);
Window from_text(const std::string& text);

std::string base64_encode(const std::string& bytes);
std::string base64_decode(const std::string& text);

}  // namespace reclab
