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

#include <algorithm>
#include <cmath>
#include <random>

#include "cli_internal.hpp"
#include "reclab/bohr.hpp"
#include "reclab/chen.hpp"
#include "reclab/chromatic.hpp"
#include "reclab/errors.hpp"
#include "reclab/gap_coloring.hpp"
#include "reclab/generators.hpp"
#include "reclab/graph.hpp"
#include "reclab/growth.hpp"
#include "reclab/hamming.hpp"
#include "reclab/kriz.hpp"
#include "reclab/sparse_difference.hpp"
#include "reclab/tuples.hpp"
#include "reclab/witness.hpp"

namespace reclab::cli {

namespace {

Json intervals_json(const std::vector<kernels::Interval>& R) {
    Json out = Json::array();
    for (const auto& iv : R) out.push_back({iv.lo, iv.hi});
    return out;
}

Json rationals_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(to_string(r));
    return out;
}

Json chromatic_json(const ChromaticResult& c) {
    return Json{{"chi", c.chi},           {"lower_bound", c.lower_bound}, {"exact", c.exact},
                {"nodes", c.nodes},       {"coloring", c.coloring},       {"clique", c.clique},
                {"odd_cycle", c.odd_cycle}};
}

unsigned small(u64 v, const char* what, u64 cap) {
    if (v > cap) throw DomainError(std::string(what) + " above " + std::to_string(cap));
    return static_cast<unsigned>(v);
}

// ---- sieve ----

Outcome sieve(const Params& p) {
    const SetFamily fam = SetFamily::parse(p.str("family"));
    const u64 lo = p.count("lo"), hi = p.count("window");
    if (hi < lo) throw RangeError("window end below its start");
    const Window w = family_window(fam, lo, hi);
    const CountingProfile prof = count_profile(fam, hi, p.u64_list("shifts"), p.u64_list("x-values"));
    Outcome o;
    o.result["family"] = fam.name();
    o.result["lo"] = lo;
    o.result["hi"] = hi;
    o.result["count"] = w.count();
    o.result["x"] = prof.x_values;
    o.result["E_of_x"] = prof.E_of_x;
    Json em = Json::object(), cm = Json::object();
    for (const auto& [m, v] : prof.E_m_of_x) em[std::to_string(m)] = v;
    for (const auto& [m, c] : prof.c_m_estimates) cm[std::to_string(m)] = to_string(c);
    o.result["E_m_of_x"] = em;
    o.result["c_m"] = cm;
    o.result["members"] = window_json(w);
    return o;
}

// ---- thmB ----

Outcome thmb_build(const Params& p) {
    const SetFamily fam = SetFamily::parse(p.str("family"));
    const GrowthFn f = GrowthFn::parse(p.str("f"));
    const u64 window = p.count("window");
    SparseDiffOptions opt;
    if (p.has("thick-T")) opt.allowed_offsets = parse_set_expr(p.str("thick-T"), 1, window);
    Outcome o;
    Json ladder = Json::array();
    SparseDiffResult res;
    std::string g_name;
    if (p.str("g") == "auto") {
        TuneResult t = auto_tune_growth(fam, f, window, opt);
        for (const TuneStep& s : t.ladder)
            ladder.push_back({{"G", s.G},
                              {"status", s.status},
                              {"density_A_in_E", s.density_A_in_E ? Json(to_string(*s.density_A_in_E)) : Json()}});
        g_name = t.spec.g.name();
        res = std::move(t.result);
    } else {
        const ThickSpec spec{GrowthFn::parse(p.str("g")), p.count("k-max")};
        g_name = spec.g.name();
        res = build_sparse_difference(fam, f, spec, window, opt);
    }
    Json& r = o.result;
    r["family"] = fam.name();
    r["f"] = f.name();
    r["g"] = g_name;
    r["window"] = window;
    r["density_A"] = to_double(res.density_A_in_E);
    r["density_B"] = to_double(res.density_B_in_E);
    r["r_hits"] = res.r_hits;
    r["provisional_tail"] = res.provisional_tail;
    r["density_A_exact"] = to_string(res.density_A_in_E);
    r["density_B_exact"] = to_string(res.density_B_in_E);
    r["density_A_with_provisional"] = to_string(res.density_A_with_provisional);
    r["sizes"] = {{"E", res.E.count()}, {"C", res.C.count()}, {"B", res.B.count()}, {"A", res.A.count()}};
    r["R"] = intervals_json(res.R);
    r["sieved_levels"] = res.sieved_levels;
    r["ladder"] = ladder;
    r["T"] = opt.allowed_offsets ? window_json(*opt.allowed_offsets) : Json();
    r["A"] = window_json(res.A);
    r["B"] = window_json(res.B);
    r["C"] = window_json(res.C);
    r["provisional"] = window_json(res.provisional);
    return o;
}

Outcome thmb_selberg(const Params& p) {
    const SelbergReport s = selberg_check(p.count("x"), p.count("m-max"));
    Outcome o;
    o.result = {{"x", s.x},
                {"m_max", s.m_max},
                {"E_x", s.E_x},
                {"E_m", s.E_m},
                {"argmax_m", s.argmax_m},
                {"max_ratio", to_string(s.max_ratio)},
                {"max_ratio_value", to_double(s.max_ratio)},
                {"fitted_C", s.fitted_C}};
    return o;
}

Outcome thmb_cm_scan(const Params& p) {
    const SetFamily fam = SetFamily::parse(p.str("family"));
    const CmScan s = c_m_syndeticity_scan(fam, p.rational("eta"), p.count("x"), p.count("m-max"));
    Outcome o;
    o.result = {{"family", fam.name()},
                {"eta", to_string(s.eta)},
                {"x", s.x},
                {"m_max", s.m_max},
                {"c_m", rationals_json(s.c_m)},
                {"level_set", s.level_set},
                {"max_gap", s.max_gap ? Json(*s.max_gap) : Json()},
                {"level_density", to_string(s.level_density)}};
    return o;
}

// ---- digit ----

Outcome digit(const Params& p) {
    const u64 a_max = p.count("a-max");
    const unsigned exp = small(p.count("window-exp"), "window-exp", 26);
    const u64 length = p.count("banach-length");
    const DigitBattery b = digit_counterexample_battery(a_max, exp);
    Outcome o;
    Json& r = o.result;
    r["window_exp"] = exp;
    r["size_E"] = b.size_E;
    r["small_counts"] = {{"4", digit_balanced_count(4)}, {"16", digit_balanced_count(16)}, {"64", digit_balanced_count(64)}};
    r["a"] = Json::array();
    for (u64 a = 1; a <= a_max; ++a) r["a"].push_back(a);
    r["representation_counts"] = b.counts;
    r["min_representation_count"] = b.counts.empty() ? 0 : *std::min_element(b.counts.begin(), b.counts.end());
    r["ratios"] = rationals_json(b.ratios);
    Json banach = Json::array();
    for (const BanachPoint& bp : b.banach)
        banach.push_back({{"length", bp.length},
                          {"best_count", bp.best_count},
                          {"best_start", bp.best_start},
                          {"ratio", to_string(bp.ratio)}});
    r["banach_profile"] = banach;
    const Window E = family_window(SetFamily::digit_balanced(), 1, u64{1} << exp);
    const BanachPoint head = banach_window_max(E, length);
    r["banach_headline"] = {{"length", head.length},
                            {"best_count", head.best_count},
                            {"best_start", head.best_start},
                            {"ratio", to_string(head.ratio)},
                            {"ratio_value", to_double(head.ratio)}};
    return o;
}

// ---- tuples ----

Outcome tuples_admissible(const Params& p) {
    const Tuple H = Tuple::parse(p.str("tuple"));
    Outcome o;
    Json residues = Json::array();
    for (u64 q : primes_up_to(H.size())) {
        std::vector<bool> seen(q, false);
        for (i64 h : H.offsets) seen[static_cast<std::size_t>(floor_mod(h, static_cast<i64>(q)))] = true;
        Json missing = Json::array();
        for (u64 c = 0; c < q; ++c)
            if (!seen[c]) missing.push_back(c);
        residues.push_back({{"p", q}, {"missing", missing}});
    }
    o.result = {{"tuple", H.offsets}, {"admissible", is_admissible(H)}, {"residues", residues}};
    return o;
}

Outcome tuples_extract(const Params& p) {
    const Window A = parse_set_expr(p.str("set"), p.count("lo"), p.count("hi"));
    const unsigned k = small(p.count("k"), "k", 1000);
    std::vector<i64> a;
    for (u64 x : A.members()) a.push_back(static_cast<i64>(x));
    const Tuple H = huang_wu_extract(a, k);
    Outcome o;
    o.result = {{"set_size", a.size()},
                {"k", k},
                {"threshold", to_string(huang_wu_threshold(k))},
                {"tuple", H.offsets},
                {"admissible", is_admissible(H)},
                {"set", window_json(A)}};
    return o;
}

Outcome tuples_translates(const Params& p) {
    const Tuple H = Tuple::parse(p.str("tuple"));
    const unsigned r = small(p.count("r"), "r", 1000);
    const u64 n_max = p.count("n-max");
    const std::vector<u64> hits = translate_search(H, r, n_max);
    Outcome o;
    o.result = {{"tuple", H.offsets}, {"r", r}, {"n_max", n_max}, {"translates", hits}, {"count", hits.size()}};
    return o;
}

Outcome tuples_delta_star(const Params& p) {
    const Window diffs = parse_set_expr(p.str("diffs"), 1, p.count("hi"));
    const DeltaStarReport rep =
        delta_star_certify(diffs, small(p.count("r"), "r", 1000), p.count("span"), p.count("trials"), p.count("seed"));
    Outcome o;
    o.result = {{"diffs", p.str("diffs")},
                {"r", rep.r},
                {"probe_span", rep.probe_span},
                {"exhaustive", rep.exhaustive},
                {"explored", rep.explored},
                {"violation", rep.violation ? Json(*rep.violation) : Json()},
                {"verdict", rep.verdict},
                {"diff_window", window_json(diffs)}};
    return o;
}

Outcome tuples_cover(const Params& p) {
    const Window A = parse_set_expr(p.str("set"), p.count("lo"), p.count("hi"));
    const CoverReport rep = syndeticity_index_cover(A, small(p.count("r-bound"), "r-bound", 1u << 20));
    Outcome o;
    o.result = {{"translates", rep.translates}, {"index", rep.translates.size()},
                {"threshold", rep.threshold},   {"checked_hi", rep.checked_hi},
                {"verified", rep.verified},     {"within_bound", rep.within_bound},
                {"verdict", rep.verdict},       {"set", window_json(A)}};
    o.complete = rep.within_bound;
    return o;
}

std::map<u64, unsigned> coloring_for(const Params& p, const SetFamily& fam, u64 hi) {
    const std::string spec = p.str("coloring");
    if (spec != "index-parity") return parse_coloring(read_file(spec));
    std::map<u64, unsigned> out;
    unsigned i = 0;
    family_window(fam, 1, hi).for_each([&](u64 n) { out[n] = (i++ % 2) + 1; });
    return out;
}

Outcome tuples_pigeonhole(const Params& p) {
    const SetFamily fam = SetFamily::parse(p.str("family"));
    const Tuple H = Tuple::parse(p.str("tuple"));
    const u64 n_max = p.count("n-max");
    if (H.offsets.front() < 0) throw DomainError("pigeonhole needs non-negative offsets");
    const auto coloring = coloring_for(p, fam, n_max + static_cast<u64>(H.offsets.back()));
    const PigeonholeReport rep = partition_pigeonhole_check(fam, coloring, H, n_max);
    Json hits = Json::array();
    for (const PigeonholeHit& h : rep.hits)
        hits.push_back({{"n", h.n},
                        {"h_low", h.h_low},
                        {"h_high", h.h_high},
                        {"low", h.low},
                        {"high", h.high},
                        {"color", h.color},
                        {"difference", h.difference},
                        {"in_H_minus_H", h.in_H_minus_H}});
    Outcome o;
    o.result = {{"family", fam.name()}, {"tuple", H.offsets},           {"colors", rep.colors},
                {"translates", rep.translates}, {"count", rep.translates.size()}, {"hits", hits}};
    return o;
}

// ---- color-gaps ----

Outcome color_gaps(const Params& p) {
    const SetFamily fam = SetFamily::parse(p.str("family"));
    const u64 window = p.count("window");
    const std::string order_text = p.str("order");
    if (order_text != "asc" && order_text != "desc") throw DomainError("--order must be asc or desc");
    const std::vector<kernels::Interval> R = build_thick_R(fam, p.u64_list("f-indices"));
    const Window E = family_window(fam, 1, window);
    const TwoColoring tc =
        greedy_two_color(E, R, order_text == "asc" ? PassOrder::Ascending : PassOrder::Descending);
    Window E1(1, window), E2(1, window);
    for (std::size_t i = 0; i < tc.vertices.size(); ++i) (tc.color[i] == 1 ? E1 : E2).insert(tc.vertices[i]);
    Json edges = Json::array();
    for (const auto& [a, b] : tc.graph.edges) edges.push_back({a, b});
    Outcome o;
    o.result = {{"family", fam.name()},
                {"window", window},
                {"order", order_text},
                {"R", intervals_json(R)},
                {"vertices", tc.graph.vertices},
                {"edges", edges},
                {"max_backward_degree", tc.graph.max_backward_degree},
                {"conflicted", tc.graph.conflicted},
                {"regime_ok", tc.graph.regime_ok},
                {"fallback", tc.fallback},
                {"hits", {tc.hits[0], tc.hits[1]}},
                {"verified", tc.verified},
                {"E1", window_json(E1)},
                {"E2", window_json(E2)}};
    return o;
}

// ---- kriz ----

Outcome kriz_kneser(const Params& p) {
    const KneserReport rep = kneser_bound_check(small(p.count("d"), "d", 64), small(p.count("k"), "k", 64),
                                                ChromaticOptions{p.count("nodes")});
    Outcome o;
    o.result = {{"d", rep.d},
                {"k", rep.k},
                {"degenerate", rep.degenerate},
                {"note", rep.note},
                {"generators", rep.generators},
                {"bound", rep.bound},
                {"chi", rep.chromatic.chi},
                {"exact", rep.chromatic.exact},
                {"verdict", rep.degenerate ? "degenerate" : (rep.pass ? "pass" : "fail")},
                {"chromatic", rep.degenerate ? Json() : chromatic_json(rep.chromatic)}};
    return o;
}

Outcome kriz_witness(const Params& p) {
    const std::vector<u64> S = p.u64_list("S");
    const u64 m = p.count("m");
    const Rational delta = p.rational("delta");
    const WitnessSearchResult w = witness_search(S, m, delta, p.count("frame-lo"));
    Outcome o;
    o.result = {{"S", S},
                {"m", m},
                {"delta", to_string(delta)},
                {"frame_lo", p.count("frame-lo")},
                {"found", w.witness.has_value()},
                {"B", w.witness ? Json(w.witness->B) : Json()},
                {"size", w.witness ? w.witness->B.size() : 0},
                {"best", w.best},
                {"best_size", w.best.size()},
                {"exact", w.exact}};
    o.complete = w.witness.has_value();
    return o;
}

std::vector<u64> f2_generators(unsigned d, unsigned radius) {
    const HammingSpace space{d};
    std::vector<u64> gens;
    for (u64 g : hamming_ball(space, radius, space.all_ones()))
        if (g != 0) gens.push_back(g);
    return gens;
}

Outcome kriz_chromatic(const Params& p) {
    const ChromaticOptions opt{p.count("nodes")};
    Outcome o;
    if (p.count("f2") != 0) {
        const unsigned d = small(p.count("d"), "d", 14), radius = small(p.count("radius"), "radius", 64);
        const std::vector<u64> gens = f2_generators(d, radius);
        const ChromaticResult c = chromatic_number(cayley_f2(d, gens), opt);
        o.result = {{"space", "F2"}, {"d", d}, {"radius", radius}, {"generators", gens}, {"chromatic", chromatic_json(c)}};
    } else {
        const SetFamily fam = SetFamily::parse(p.str("family"));
        const std::vector<u64> S = p.u64_list("S");
        const std::vector<u64> verts = family_window(fam, p.count("lo"), p.count("hi")).members();
        if (verts.size() > kMaxGraphVertices) throw BudgetError("too many vertices", kMaxGraphVertices);
        const ChromaticResult c = chromatic_number(cayley_integer(verts, S), opt);
        o.result = {{"space", "integers"}, {"family", fam.name()}, {"S", S}, {"vertices", verts},
                    {"chromatic", chromatic_json(c)}};
    }
    return o;
}

Outcome kriz_assemble(const Params& p) {
    AssemblyOptions opt;
    opt.s_cap = p.count("s-cap");
    opt.max_size = small(p.count("max-size"), "max-size", 6);
    opt.l_max = p.count("l-max");
    opt.chromatic_nodes = std::min<u64>(p.count("nodes"), 200'000);
    const SetFamily fam = SetFamily::parse(p.str("family"));
    const AssemblyResult a =
        assemble_separation(fam, p.rational("delta"), small(p.count("rounds"), "rounds", 3), opt);
    Json rounds = Json::array();
    for (const AssemblyRound& r : a.rounds)
        rounds.push_back({{"k", r.k},
                          {"S", r.S},
                          {"C", r.C},
                          {"m", r.m},
                          {"cond_i", r.cond_i},
                          {"cond_ii", r.cond_ii},
                          {"cond_iii", r.cond_iii},
                          {"chi_lower", r.chi_lower}});
    Outcome o;
    o.result = {{"family", fam.name()},
                {"delta", p.str("delta")},
                {"completed", a.completed},
                {"failure", a.failure},
                {"window_min", opt.window_min},
                {"chromatic_nodes", opt.chromatic_nodes},
                {"rounds", rounds},
                {"transcript", a.transcript}};
    o.complete = a.completed;
    return o;
}

Outcome kriz_htilde(const Params& p) {
    const RationalTorusPoint alpha = RationalTorusPoint::parse(p.str("alpha"));
    const unsigned k = small(p.count("k"), "k", 64);
    const Rational eps = p.rational("eps");
    const i64 lo = p.integer("lo"), hi = p.integer("hi");
    const std::vector<i64> members = htilde(alpha, k, eps, lo, hi);
    Outcome o;
    o.result = {{"alpha", rationals_json(alpha.coords)}, {"k", k}, {"eps", to_string(eps)}, {"lo", lo},
                {"hi", hi}, {"members", members}, {"count", members.size()}};
    return o;
}

Outcome kriz_certificate(const Params& p) {
    const SetFamily fam = SetFamily::parse(p.str("family"));
    const u64 lo = p.count("lo"), hi = p.count("hi");
    if (hi <= lo) throw RangeError("certificate window needs lo < hi");
    const std::vector<u64> S = parse_set_expr(p.str("S"), 1, hi - lo).members();
    const unsigned k = small(p.count("k"), "k", 64);
    const CertificateReport rep =
        chromatic_intersectivity_certificate(fam, S, k, lo, hi, ChromaticOptions{p.count("nodes")});
    Outcome o;
    o.result = {{"family", fam.name()}, {"S", S},
                {"k", k},               {"lo", lo},
                {"hi", hi},             {"vertices", rep.vertices},
                {"certified", rep.certified}, {"verdict", rep.verdict},
                {"chromatic", chromatic_json(rep.chromatic)}};
    return o;
}

// ---- bohr ----

Outcome bohr(const Params& p) {
    const BohrTarget t = BohrTarget::parse(p.str("family"));
    const BohrReport rep = bohr_pipeline(t, p.count("bound"));
    Json moduli = Json::array();
    for (const BlockedModulus& bm : rep.moduli)
        moduli.push_back(
            {{"c", bm.c}, {"blocked", bm.blocked}, {"exceptions", bm.exceptions}, {"provenance", bm.provenance}});
    Outcome o;
    o.result = {{"family", rep.family},
                {"prime_bound", p.count("bound")},
                {"moduli", moduli},
                {"trail", rationals_json(rep.trail)},
                {"final_bound", to_string(rep.final_bound)},
                {"final_bound_value", to_double(rep.final_bound)},
                {"check_bound", rep.check_bound},
                {"notes", rep.notes}};
    return o;
}

// ---- chen ----

Outcome chen_theta(const Params& p) {
    Json rows = Json::array();
    for (u64 n : p.u64_list("n")) rows.push_back({{"n", n}, {"theta", theta(n)}});
    Outcome o;
    o.result = {{"values", rows}};
    return o;
}

Outcome chen_sum_cmd(const Params& p) {
    const ChenSum s = chen_sum(p.count("N"));
    Outcome o;
    o.result = {{"N", s.N}, {"sum", s.sum}, {"ratio", s.ratio}, {"support", s.support}};
    return o;
}

std::vector<Complex> gowers_input(const Params& p) {
    const std::string spec = p.str("fn");
    const u64 N = p.count("zn");
    const bool named = spec.rfind("constant:", 0) == 0 || spec.rfind("indicator:", 0) == 0 ||
                       spec.rfind("theta:", 0) == 0;
    return named ? named_function(spec, N) : load_function_text(read_file(spec), N);
}

Outcome chen_gowers(const Params& p) {
    const std::vector<Complex> f = gowers_input(p);
    const int k = static_cast<int>(small(p.count("k"), "k", 3));
    const GowersResult g = gowers_norm(f, k);
    Json re = Json::array(), im = Json::array();
    for (const Complex& z : f) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    Outcome o;
    o.result = {{"fn", p.str("fn")}, {"N", f.size()}, {"k", k}, {"norm", g.norm}, {"raw", g.raw},
                {"clamped", g.clamped}, {"f_real", re}, {"f_imag", im}};
    return o;
}

// Primes in [lo, hi], each kept with probability `density` (seeded).
Window seeded_prime_subset(u64 lo, u64 hi, double density, u64 seed) {
    if (density <= 0 || density > 1) throw DomainError("density must lie in (0, 1]");
    Window A = family_window(SetFamily::primes(), lo, hi);
    if (density >= 1) return A;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (u64 q : A.members())
        if (u(rng) >= density) A.erase(q);
    return A;
}

Outcome chen_recurrence(const Params& p) {
    const unsigned k = small(p.count("k"), "k", 2);
    const Window A = seeded_prime_subset(p.count("lo"), p.count("hi"), p.real("density"), p.count("seed"));
    const auto hit = recurrence_search(A, k);
    Outcome o;
    o.result = {{"k", k},
                {"A", A.members()},
                {"A_size", A.count()},
                {"found", hit.has_value()},
                {"a", hit ? Json(hit->a) : Json()},
                {"p", hit ? Json(hit->p) : Json()},
                {"terms", hit ? Json(hit->terms) : Json()}};
    o.complete = hit.has_value();
    return o;
}

}  // namespace

Outcome compute(const std::string& command, const std::string& mode, const Params& p) {
    if (command == "sieve") return sieve(p);
    if (command == "thmB") {
        if (mode == "build") return thmb_build(p);
        if (mode == "selberg") return thmb_selberg(p);
        return thmb_cm_scan(p);
    }
    if (command == "digit") return digit(p);
    if (command == "tuples") {
        if (mode == "admissible") return tuples_admissible(p);
        if (mode == "extract") return tuples_extract(p);
        if (mode == "translates") return tuples_translates(p);
        if (mode == "delta-star") return tuples_delta_star(p);
        if (mode == "cover") return tuples_cover(p);
        return tuples_pigeonhole(p);
    }
    if (command == "color-gaps") return color_gaps(p);
    if (command == "kriz") {
        if (mode == "kneser") return kriz_kneser(p);
        if (mode == "witness") return kriz_witness(p);
        if (mode == "chromatic") return kriz_chromatic(p);
        if (mode == "assemble") return kriz_assemble(p);
        if (mode == "htilde") return kriz_htilde(p);
        return kriz_certificate(p);
    }
    if (command == "bohr") return bohr(p);
    if (command == "chen") {
        if (mode == "theta") return chen_theta(p);
        if (mode == "sum") return chen_sum_cmd(p);
        if (mode == "gowers") return chen_gowers(p);
        return chen_recurrence(p);
    }
    throw DomainError("unknown command '" + command + "'");
}

}  // namespace reclab::cli
