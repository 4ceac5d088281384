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

// Acceptance battery: one PASS/FAIL line per criterion. Tolerances and
// budgets are fixed here; the process exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli_internal.hpp"
#include "reclab/bohr.hpp"
#include "reclab/chen.hpp"
#include "reclab/cli.hpp"
#include "reclab/gap_coloring.hpp"
#include "reclab/generators.hpp"
#include "reclab/kernels.hpp"
#include "reclab/kriz.hpp"
#include "reclab/sparse_difference.hpp"
#include "reclab/tuples.hpp"
#include "reclab/witness.hpp"

using namespace reclab;
using Json = cli::Json;

namespace {

constexpr double kThmBSeconds = 300;
constexpr double kDigitSeconds = 120;
constexpr double kKneserSeconds = 60;
constexpr double kWitnessSeconds = 600;
constexpr double kGapSeconds = 30;
constexpr double kDensityFloor = 0.9;
constexpr double kBanachCeiling = 0.02;
constexpr double kGowersTol = 1e-9;
constexpr double kMertensTol = 0.10;
constexpr double kChenBandLo = 3.9, kChenBandHi = 4.0, kChenFloor = 0.05;
constexpr u64 kKneserNodes = 2'000'000;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
    }
};

int failures = 0;

void report(int n, const Verdict& v) {
    if (!v.pass) ++failures;
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& note : v.notes) std::cout << "    " << note << "\n";
    std::cout.flush();
}

std::string fmt(double x, int prec = 4) {
    std::ostringstream s;
    s.precision(prec);
    s << std::fixed << x;
    return s.str();
}

u64 brute_r_hits(const Window& A, const std::vector<kernels::Interval>& R) {
    u64 cap = 0;
    for (const auto& iv : R) cap = std::max(cap, iv.hi);
    cap = std::min(cap, A.hi() - A.lo());
    const Window d = kernels::serial::difference_bits(A, A, cap);
    u64 hits = 0;
    for (const auto& iv : R)
        for (u64 m = iv.lo; m <= std::min(iv.hi, cap); ++m) hits += d.contains(m);
    return hits;
}

bool residues_admissible(const std::vector<i64>& h) {
    for (u64 p = 2; p <= h.size(); ++p) {
        if (!is_prime(p)) continue;
        std::set<i64> seen;
        for (i64 x : h) seen.insert(floor_mod(x, static_cast<i64>(p)));
        if (seen.size() == p) return false;
    }
    return true;
}

// ---- criteria ----

void criterion1() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const TuneResult t = auto_tune_growth(SetFamily::primes(), GrowthFn::parse("pow:2"), 10'000'000);
    const double secs = seconds_since(t0);
    v.require(secs <= kThmBSeconds, "runtime " + fmt(secs, 1) + " s <= 300 s");
    const u64 hits = brute_r_hits(t.result.A, t.result.R);
    v.require(t.result.r_hits == 0 && hits == 0, "r_hits = 0 (brute-force recheck " + std::to_string(hits) + ")");
    const double d = to_double(t.result.density_A_in_E);
    v.require(d >= kDensityFloor, "density_A_in_E = " + fmt(d) + " >= 0.9 with g = " + t.spec.g.name());
    std::string trail;
    bool monotone = true;
    std::optional<Rational> prev;
    for (const TuneStep& s : t.ladder) {
        if (!s.density_A_in_E) continue;
        trail += (trail.empty() ? "" : ", ") + std::to_string(s.G) + ":" + fmt(to_double(*s.density_A_in_E), 3);
        if (prev && *s.density_A_in_E < *prev) monotone = false;
        prev = s.density_A_in_E;
    }
    v.require(monotone, "density non-decreasing across the tuning ladder [" + trail + "]");
    report(1, v);
}

void criterion2() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    v.require(digit_balanced_count(4) == 1 && digit_balanced_count(16) == 4 && digit_balanced_count(64) == 14,
              "counts 1, 4, 14 at 4, 16, 64");
    const DigitBattery b = digit_counterexample_battery(50, 24);
    const u64 least = *std::min_element(b.counts.begin(), b.counts.end());
    v.require(least >= 1, "every a <= 50 represented in E ∩ [1, 2^24] (least count " + std::to_string(least) + ")");
    const BanachPoint bp = b.banach[9];
    const double ratio = to_double(bp.ratio);
    v.require(bp.length == 1024 && ratio < kBanachCeiling,
              "Banach ratio at N = 2^10 is " + fmt(ratio) + " (" + std::to_string(bp.best_count) + " members in [" +
                  std::to_string(bp.best_start) + ", " + std::to_string(bp.best_start + 1023) + "]), needs < 0.02");
    const double secs = seconds_since(t0);
    v.require(secs <= kDigitSeconds, "runtime " + fmt(secs, 1) + " s <= 120 s");
    report(2, v);
}

void criterion3() {
    Verdict v;
    for (unsigned d : {4u, 5u}) {
        const KneserReport r = kneser_bound_check(d, 1, ChromaticOptions{kKneserNodes});
        v.require(r.chromatic.exact && r.chromatic.chi == 16,
                  "(" + std::to_string(d) + ",1) exact chi = " + std::to_string(r.chromatic.chi));
    }
    std::string grid;
    bool all = true;
    double slowest = 0;
    for (unsigned k = 1; k <= 2; ++k)
        for (unsigned d = 2 * k + 2; d <= 10; ++d) {
            const auto t0 = std::chrono::steady_clock::now();
            const KneserReport r = kneser_bound_check(d, k, ChromaticOptions{kKneserNodes});
            const double secs = seconds_since(t0);
            slowest = std::max(slowest, secs);
            all = all && r.pass && !r.degenerate && secs <= kKneserSeconds;
            grid += " (" + std::to_string(d) + "," + std::to_string(k) + "):" + std::to_string(r.chromatic.lower_bound) +
                    (r.chromatic.exact ? "=" : "<=") + std::to_string(r.chromatic.chi);
        }
    v.require(all, "chi >= 2k+1 on every nondegenerate (d,k), d <= 10, k <= 2, slowest " + fmt(slowest, 1) +
                       " s; lower:upper" + grid);
    report(3, v);
}

void criterion4() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto w = witness_search({1}, 10, Rational(7, 20));
    v.require(w.exact && w.best.size() == 4 && w.witness && verify_witness({1}, *w.witness),
              "S = {1}, m = 10: exact maximum |B| = " + std::to_string(w.best.size()));
    u64 cases = 0, disagreements = 0, bad_witness = 0;
    for (u64 mask = 1; mask < 32; ++mask) {
        std::vector<u64> S;
        for (u64 s = 1; s <= 5; ++s)
            if (mask >> (s - 1) & 1) S.push_back(s);
        if (S.size() > 3) continue;
        const u64 smax = S.back();
        for (u64 m = 1; m <= 20; ++m) {
            ++cases;
            const auto r = witness_search(S, m, Rational(0));
            std::size_t best = 0;
            if (m > 2 * smax) {
                const u64 top = m - 2 * smax;
                for (u64 b = 0; b < (u64{1} << top); ++b) {
                    bool ok = true;
                    for (u64 s : S) ok = ok && !(b & (b << s));
                    if (ok) best = std::max<std::size_t>(best, std::popcount(b));
                }
            }
            disagreements += !r.exact || r.best.size() != best;
            if (r.witness && !verify_witness(S, *r.witness)) ++bad_witness;
        }
    }
    v.require(disagreements == 0, std::to_string(cases) + " (S, m) cases agree with exhaustive enumeration");
    v.require(bad_witness == 0, "every returned witness passes the four-constraint checker");
    const double secs = seconds_since(t0);
    v.require(secs <= kWitnessSeconds, "runtime " + fmt(secs, 1) + " s <= 600 s");
    report(4, v);
}

void criterion5() {
    Verdict v;
    u64 checked = 0, bad = 0;
    for (u64 mask = 1; mask < (1u << 13); ++mask) {
        if (std::popcount(mask) > 5) continue;
        std::vector<i64> h;
        for (int i = 0; i < 13; ++i)
            if (mask >> i & 1) h.push_back(i);
        ++checked;
        bad += is_admissible(Tuple(h)) != residues_admissible(h);
    }
    v.require(bad == 0, "is_admissible agrees with residue scanning on " + std::to_string(checked) + " tuples");
    const auto hits = translate_search(Tuple::parse("0,2,6,8,12,18,20,26"), 8, 100);
    v.require(std::find(hits.begin(), hits.end(), 11) != hits.end(), "8-tuple translates up to 100 include 11");
    std::mt19937_64 rng(5);
    u64 fails = 0;
    for (int t = 0; t < 1000; ++t) {
        const unsigned k = 1 + rng() % 10;
        const std::size_t size = static_cast<std::size_t>(std::ceil(to_double(huang_wu_threshold(k)))) + rng() % 30;
        std::set<i64> s;
        while (s.size() < size) s.insert(static_cast<i64>(rng() % 2000) - 500);
        const Tuple H = huang_wu_extract(std::vector<i64>(s.begin(), s.end()), k);
        fails += !(is_admissible(H) && residues_admissible(H.offsets) && H.size() == k);
    }
    v.require(fails == 0, "huang_wu_extract admissible on 1000 seeded random inputs");
    report(5, v);
}

void criterion6() {
    Verdict v;
    bool ones = true;
    for (u64 N = 1; N <= 11; ++N)
        for (int k = 1; k <= 3; ++k) ones = ones && gowers_norm(named_function("constant:1", N), k).norm == 1.0;
    v.require(ones, "||1||_{U^k(Z_N)} = 1 exactly for k <= 3, N <= 11");
    std::vector<Complex> delta(5, 0.0);
    delta[0] = 1.0;
    const double dn = gowers_norm(delta, 2).norm;
    v.require(std::abs(dn - std::pow(5.0, -0.75)) < kGowersTol, "||delta_0||_{U^2(Z_5)} = " + fmt(dn, 12));
    std::mt19937_64 rng(6);
    std::normal_distribution<double> g;
    double worst = 0;
    bool mono = true;
    for (int t = 0; t < 50; ++t) {
        std::vector<Complex> f(8);
        for (auto& z : f) z = {g(rng), g(rng)};
        double four = 0;
        for (std::size_t xi = 0; xi < 8; ++xi) {
            Complex hat = 0;
            for (std::size_t x = 0; x < 8; ++x) hat += f[x] * std::polar(1.0, -2.0 * M_PI * double(x * xi % 8) / 8.0);
            four += std::pow(std::abs(hat / 8.0), 4);
        }
        const double u2 = gowers_norm(f, 2).norm;
        worst = std::max(worst, std::abs(u2 - std::pow(four, 0.25)));
        mono = mono && u2 <= gowers_norm(f, 3).norm + 1e-12;
    }
    v.require(worst < kGowersTol, "U^2 Fourier identity on 50 random f on Z_8, worst error " + std::to_string(worst));
    v.require(mono, "U^2 <= U^3 for every tested f");
    report(6, v);
}

void criterion7() {
    Verdict v;
    const ChenSum s = chen_sum(1'000'000);
    v.require(s.ratio >= kChenBandLo && s.ratio <= kChenBandHi && s.ratio > kChenFloor,
              "chen_sum(10^6)/10^6 = " + fmt(s.ratio, 5) + " in [3.9, 4.0]");
    const auto h = recurrence_search(family_window(SetFamily::primes(), 1, 100), 1);
    v.require(h && h->a == 3 && h->p == 3 && is_prime(h->terms[0]) && is_prime(h->terms[1]),
              "recurrence_search(P ∩ [1,100], 1) = (3, 3)");
    const Window P = family_window(SetFamily::primes(), 1, 100'000);
    u64 ok = 0;
    double least_density = 1;
    for (u64 seed = 0; seed < 20; ++seed) {
        // exactly ceil(rho |P|) primes, rho in {0.30, 0.32, ..., 0.38}
        std::mt19937_64 rng(seed);
        const auto primes = P.members();
        const std::size_t take = static_cast<std::size_t>(
            std::ceil((0.30 + 0.02 * static_cast<double>(seed % 5)) * static_cast<double>(primes.size())));
        std::vector<u64> chosen;
        std::sample(primes.begin(), primes.end(), std::back_inserter(chosen), take, rng);
        const Window A = Window::from_members(1, 100'000, chosen);
        least_density = std::min(least_density, double(A.count()) / double(P.count()));
        const auto hit = recurrence_search(A, 1);
        ok += hit && A.contains(hit->a) && A.contains(hit->a + hit->p + 1);
    }
    v.require(ok == 20 && least_density >= 0.3,
              std::to_string(ok) + "/20 seeded subsets of P ∩ [1,10^5] (least relative density " +
                  fmt(least_density, 3) + ")");
    report(7, v);
}

void criterion8() {
    Verdict v;
    const BohrReport p = bohr_pipeline(BohrTarget::parse("primes"), 100);
    Rational prod = 1;
    for (u64 q : primes_up_to(100)) prod *= 1 - Rational(1, q);
    v.require(p.final_bound == prod, "primes bound equals prod_{p<=100} (1 - 1/p) = " + to_string(prod));
    const double mertens = std::exp(-0.57721566490153286) / std::log(100.0);
    const double rel = std::abs(to_double(prod) - mertens) / mertens;
    v.require(rel <= kMertensTol, "within " + fmt(100 * rel, 2) + "% of e^-gamma / ln 100");
    const BohrReport q = bohr_pipeline(BohrTarget::parse("qform:1,0,1"), 100);
    const auto values = quadratic_form_values({1, 0, 1}, 1'000'000, 1001);
    u64 stray = 0;
    for (const auto& bm : q.moduli) {
        std::set<u64> blocked(bm.blocked.begin(), bm.blocked.end()), exc(bm.exceptions.begin(), bm.exceptions.end());
        for (u64 n : values) stray += blocked.count(n % bm.c) && !exc.count(n);
    }
    v.require(stray == 0, std::to_string(q.moduli.size()) + " x^2+y^2 moduli, zero blocked-class hits among " +
                              std::to_string(values.size()) + " form values <= 10^6");
    bool dec = true;
    for (const auto* r : {&p, &q})
        for (std::size_t i = 1; i < r->trail.size(); ++i) dec = dec && r->trail[i] < r->trail[i - 1];
    v.require(dec, "bound trails strictly decreasing");
    report(8, v);
}

void criterion9() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const SetFamily sq = SetFamily::polynomial({1, 0, 0});
    const auto R = build_thick_R(sq, {16, 10000, 100000000});
    const Window E = family_window(sq, 1, 1'000'000);
    const TwoColoring tc = greedy_two_color(E, R);
    Window E1(1, 1'000'000), E2(1, 1'000'000);
    for (std::size_t i = 0; i < tc.vertices.size(); ++i) (tc.color[i] == 1 ? E1 : E2).insert(tc.vertices[i]);
    const u64 h1 = brute_r_hits(E1, R), h2 = brute_r_hits(E2, R);
    const double secs = seconds_since(t0);
    v.require(tc.verified && h1 == 0 && h2 == 0, "zero R hits in both classes (recheck " + std::to_string(h1) + ", " +
                                                     std::to_string(h2) + ")");
    v.require(tc.graph.max_backward_degree <= 1,
              "max backward degree " + std::to_string(tc.graph.max_backward_degree));
    v.require(secs <= kGapSeconds, "runtime " + fmt(secs, 2) + " s <= 30 s");
    report(9, v);
}

void criterion10() {
    Verdict v;
    const AssemblyResult a = assemble_separation(SetFamily::parse("naturals"), Rational(1, 4), 2);
    v.require(a.completed && a.rounds.size() == 2, "two rounds completed");
    for (const AssemblyRound& r : a.rounds) {
        std::set<u64> S(r.S.begin(), r.S.end());
        bool avoid = true;
        for (u64 x : r.C)
            for (u64 y : r.C)
                if (x > y && S.count(x - y)) avoid = false;
        const bool wit = verify_witness(r.S, Witness{r.C, r.m, Rational(1, 4), 0});
        v.require(r.cond_i && r.cond_ii && r.cond_iii && avoid && wit && r.chi_lower >= r.k + 1,
                  "round " + std::to_string(r.k) + ": S = " + cli::Json(r.S).dump() + ", m = " + std::to_string(r.m) +
                      ", |C| = " + std::to_string(r.C.size()) + ", chi >= " + std::to_string(r.chi_lower));
    }
    if (a.rounds.size() == 2) {
        const AssemblyRound& r = a.rounds[1];
        const u64 hi = std::max<u64>(64, 4 * r.S.back());
        const CertificateReport c =
            chromatic_intersectivity_certificate(SetFamily::parse("naturals"), r.S, 2, 1, hi, {200'000});
        v.require(c.chromatic.lower_bound >= 3, "independent chi(Cay([1," + std::to_string(hi) + "], S_2)) >= 3");
    }
    report(10, v);
}

struct CliRun {
    int code;
    Json report;
};

CliRun cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    Json j;
    try {
        j = Json::parse(out.str());
    } catch (...) {
    }
    return {code, j};
}

void criterion11() {
    Verdict v;
    const std::vector<std::vector<std::string>> runs = {
        {"thmB", "build", "--family", "primes", "--f", "pow:2", "--g", "auto", "--window", "1e7"},
        {"digit", "--a-max", "50", "--window-exp", "24"},
        {"kriz", "kneser", "--d", "5", "--k", "1"},
        {"kriz", "kneser", "--d", "8", "--k", "2"},
        {"kriz", "witness", "--S", "1", "--m", "10"},
        {"tuples", "translates", "--r", "8", "--n-max", "100"},
        {"tuples", "extract", "--set", "range:1..20", "--k", "3"},
        {"tuples", "delta-star", "--r", "5", "--span", "1000", "--diffs", "multiples:6"},
        {"chen", "gowers", "--fn", "indicator:primes", "--zn", "11", "--k", "3"},
        {"chen", "sum", "--N", "1e6"},
        {"chen", "recurrence", "--hi", "1e5", "--density", "0.3", "--seed", "3"},
        {"bohr", "pipeline", "--family", "primes", "--bound", "100"},
        {"bohr", "pipeline", "--family", "qform:1,0,1", "--bound", "100"},
        {"color-gaps", "--family", "poly:1,0,0", "--f-indices", "16,10000,100000000", "--window", "1e6"},
        {"kriz", "assemble", "--delta", "1/4", "--rounds", "2"},
    };
    u64 reproduced = 0, verified = 0;
    for (const auto& args : runs) {
        std::string label;
        for (const auto& a : args) label += (label.empty() ? "" : " ") + a;
        const CliRun first = cli_run(args);
        if (first.code != 0) {
            v.require(false, "run failed (exit " + std::to_string(first.code) + "): " + label);
            continue;
        }
        const std::string cfg_path = "/tmp/reclab_acceptance.cfg";
        {
            std::ofstream f(cfg_path);
            for (const auto& [k, val] : first.report["full_config"].items()) f << k << "=" << val.get<std::string>() << "\n";
        }
        const CliRun again = cli_run({"--config", cfg_path});
        Json a = first.report, b = again.report;
        a.erase("timing");
        b.erase("timing");
        const bool same = again.code == 0 && a.dump() == b.dump();
        reproduced += same;
        const std::string rep_path = "/tmp/reclab_acceptance.json";
        std::ofstream(rep_path) << first.report.dump(2);
        const bool ok = cli_run({"verify", "--report", rep_path}).code == 0;
        verified += ok;
        if (!same || !ok) v.require(false, label + (same ? "" : " not reproduced") + (ok ? "" : " failed verify"));
        std::remove(cfg_path.c_str());
        std::remove(rep_path.c_str());
    }
    v.require(reproduced == runs.size(), std::to_string(reproduced) + "/" + std::to_string(runs.size()) +
                                             " reports byte-identical when rerun from their embedded config");
    v.require(verified == runs.size(), std::to_string(verified) + "/" + std::to_string(runs.size()) + " reports pass verify");
    report(11, v);
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> all = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
    for (std::size_t i = 0; i < all.size(); ++i) {
        try {
            all[i]();
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "criterion " << i + 1 << ": FAIL (exception: " << e.what() << ")\n";
        }
    }
    std::cout << failures << " criterion failure(s)\n";
    return failures == 0 ? 0 : 1;
}
