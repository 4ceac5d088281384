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

#include <optional>
#include <string>
#include <vector>

#include "reclab/generators.hpp"
#include "reclab/growth.hpp"
#include "reclab/kernels.hpp"
#include "reclab/window.hpp"

namespace reclab {

struct ThickSpec {
    GrowthFn g;
    u64 k_max;
};

// I_k = [g(k) - k, g(k)] for k = 1..k_max; GrowthTooSlow when two overlap
// or I_1 does not start at a positive integer.
std::vector<kernels::Interval> thick_intervals(const ThickSpec& thick);

struct SparseDiffOptions {
    // When set, the target becomes R ∩ T for this window T (the thick set of
    // the epsilon variant): only those shifts are sieved, removed and checked.
    std::optional<Window> allowed_offsets;
};

struct SparseDiffResult {
    Window E;
    Window C;
    Window B;
    Window A;
    Window provisional;  // members of C whose exclusion test was cut off by the window
    std::vector<kernels::Interval> R;  // intervals meeting [1, window_hi]
    std::vector<u64> sieved_levels;    // k whose rule fits in the window
    u64 r_hits = 0;
    Rational density_A_in_E;  // non-provisional members of A only
    Rational density_A_with_provisional;  // all of A
    Rational density_B_in_E;
    u64 provisional_tail = 0;  // |A ∩ provisional|
};

SparseDiffResult build_sparse_difference(const SetFamily& E, const GrowthFn& f, const ThickSpec& thick,
                                         u64 window_hi, const SparseDiffOptions& opt = {});
// Same, with E already materialised over [1, window_hi].
SparseDiffResult build_sparse_difference(const Window& E, const GrowthFn& f, const ThickSpec& thick,
                                         const SparseDiffOptions& opt = {});

// sum over m in R (∩ T when given) of #{a in A : a + m in A}; computed from
// A and R alone.
u64 count_r_hits(const Window& A, const std::vector<kernels::Interval>& R, const Window* allowed = nullptr);

struct TuneStep {
    u64 G;
    std::string status;  // "ok", "growth-too-slow: ...", "density below 0.9"
    std::optional<Rational> density_A_in_E;
};

struct TuneResult {
    ThickSpec spec;
    std::vector<TuneStep> ladder;
    SparseDiffResult result;
};

inline constexpr unsigned kTuneLevels = 8;

// Ladder g = table(G, G^2, ..., G^8) for G = 2, 4, 8, ...; returns the first
// G whose build succeeds with density_A_in_E >= 9/10. SearchFailed otherwise.
TuneResult auto_tune_growth(const SetFamily& E, const GrowthFn& f, u64 window_hi,
                            const SparseDiffOptions& opt = {});

struct SelbergReport {
    u64 x;
    u64 m_max;
    u64 E_x;
    std::vector<u64> E_m;  // index m-1
    u64 argmax_m;
    Rational max_ratio;
    double fitted_C;  // max_ratio * ln x / ln ln x
};

SelbergReport selberg_check(u64 x, u64 m_max);

struct DigitBattery {
    unsigned window_exp;
    u64 size_E;
    std::vector<u64> counts;        // index a-1
    std::vector<Rational> ratios;   // counts / size_E
    std::vector<BanachPoint> banach;  // lengths 2^1 .. 2^window_exp
};

DigitBattery digit_counterexample_battery(u64 a_max, unsigned window_exp);

struct CmScan {
    Rational eta;
    u64 x;
    u64 m_max;
    std::vector<Rational> c_m;  // index m-1
    std::vector<u64> level_set;
    std::optional<u64> max_gap;  // over [1, m_max]
    Rational level_density;
};

CmScan c_m_syndeticity_scan(const SetFamily& E, const Rational& eta, u64 x, u64 m_max);

}  // namespace reclab
