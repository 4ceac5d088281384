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

#include "doctest.h"
#include "reclab/errors.hpp"
#include "reclab/window.hpp"

#include <random>
#include <set>

using namespace reclab;

namespace {

Window random_window(std::mt19937_64& rng, u64 lo, u64 hi, double p) {
    Window w(lo, hi);
    std::bernoulli_distribution keep(p);
    for (u64 n = lo; n <= hi; ++n)
        if (keep(rng)) w.insert(n);
    return w;
}

}  // namespace

TEST_CASE("basic membership") {
    const std::vector<u64> m{3, 5, 64, 65, 130};
    const Window w = Window::from_members(3, 130, m);
    CHECK(w.count() == 5);
    CHECK(w.members() == m);
    CHECK(w.first() == 3u);
    CHECK(w.last() == 130u);
    CHECK(w.count_range(4, 65) == 3);
    CHECK_FALSE(w.contains(2));
    CHECK(Window(10, 20).empty());
    CHECK_THROWS_AS(Window(5, 4), DomainError);
}

TEST_CASE("window bit budget") {
    CHECK_THROWS_AS(Window(0, kWindowBitBudget + 10), BudgetError);
}

TEST_CASE("syndeticity gap uses virtual endpoints") {
    CHECK(syndeticity_gap(Window::full(1, 10)) == 1u);
    CHECK_FALSE(syndeticity_gap(Window(1, 10)).has_value());
    const std::vector<u64> m{4, 6};
    CHECK(syndeticity_gap(Window::from_members(1, 10, m)) == 5u);
}

TEST_CASE("difference set of a small set") {
    const std::vector<u64> m{1, 4, 6};
    const Window a = Window::from_members(0, 10, m);
    const DifferenceSet d = difference_set(a, a, 10);
    CHECK(d.zero_present);
    CHECK(d.positive.members() == std::vector<u64>{2, 3, 5});
}

TEST_CASE("property: set algebra matches std::set") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const Window a = random_window(rng, 7, 400, 0.3), b = random_window(rng, 7, 400, 0.5);
        const auto am = a.members(), bm = b.members();
        std::set<u64> sa(am.begin(), am.end()), sb(bm.begin(), bm.end());
        u64 inter = 0;
        for (u64 x : sa) inter += sb.count(x);
        CHECK((a & b).count() == inter);
        CHECK((a | b).count() == sa.size() + sb.size() - inter);
        CHECK(set_minus(a, b).count() == sa.size() - inter);
        const u64 shift = 1 + rng() % 50;
        u64 overlap = 0;
        for (u64 x : sa) overlap += sb.count(x + shift);
        CHECK(shifted_overlap(a, b, shift) == overlap);
        u64 rep = 0;
        for (u64 x : sa) rep += sa.count(x + shift);
        CHECK(representation_count(a, shift) == rep);
    }
}

TEST_CASE("property: RLE, text and base64 round trips") {
    std::mt19937_64 rng(5);
    for (double p : {0.0, 0.01, 0.5, 0.99, 1.0}) {
        const Window w = random_window(rng, 1000, 5000, p);
        CHECK(from_rle_binary(to_rle_binary(w)) == w);
        CHECK(from_text(to_text(w)) == w);
        const std::string bytes = to_rle_binary(w);
        for (std::size_t cut = 0; cut < 4; ++cut) {
            const std::string s = bytes.substr(0, bytes.size() - cut);
            CHECK(base64_decode(base64_encode(s)) == s);
        }
    }
    CHECK_THROWS(from_rle_binary("XXXX"));
    CHECK_THROWS(base64_decode("ab$d"));
}

TEST_CASE("banach window maximum") {
    const std::vector<u64> m{1, 2, 3, 10, 11, 20};
    const Window w = Window::from_members(1, 20, m);
    const BanachPoint b = banach_window_max(w, 3);
    CHECK(b.best_count == 3);
    CHECK(b.best_start == 1);
    CHECK(b.ratio == Rational(1));
}

TEST_CASE("translated and rebased") {
    const std::vector<u64> m{2, 5, 9};
    const Window w = Window::from_members(0, 10, m);
    CHECK(translated(w, 2).members() == std::vector<u64>{4, 7});
    CHECK(translated(w, -3).members() == std::vector<u64>{2, 6});
    CHECK(w.rebased(3, 30).members() == std::vector<u64>{5, 9});
    CHECK(w.rebased(3, 30).subset_of(Window::full(3, 30)));
}
