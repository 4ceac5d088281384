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

#include "reclab/gap_coloring.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "reclab/errors.hpp"

namespace reclab {

std::vector<Interval> build_thick_R(const SetFamily& E, const std::vector<u64>& f_values) {
    if (f_values.empty()) throw DomainError("need at least one f value");
    std::vector<Interval> R;
    for (std::size_t i = 0; i < f_values.size(); ++i) {
        const u64 f = f_values[i];
        const u64 n = i + 2;
        if (!membership(E, f)) throw DomainError(std::to_string(f) + " is not a member of " + E.name());
        if (i > 0 && f <= f_values[i - 1]) throw DomainError("f values must be strictly increasing");
        if (f > UINT64_MAX - n) throw RangeError("interval end overflows");
        if (!R.empty() && f <= R.back().hi)
            throw GrowthTooSlow("growth-too-slow: I_" + std::to_string(n) + " = [" + std::to_string(f) + ", " +
                                std::to_string(f + n) + "] overlaps I_" + std::to_string(n - 1));
        R.push_back({f, f + n});
    }
    return R;
}

ConflictGraph conflict_graph(const Window& e, const std::vector<Interval>& R) {
    ConflictGraph g;
    g.edges = kernels::conflict_edges(e, R);
    g.vertices = e.count();
    std::size_t run = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        run = (i > 0 && g.edges[i].first == g.edges[i - 1].first) ? run + 1 : 1;
        if (run == 1) ++g.conflicted;
        g.max_backward_degree = std::max(g.max_backward_degree, run);
    }
    g.regime_ok = g.max_backward_degree <= 1 && 2 * g.conflicted <= g.vertices;
    return g;
}

TwoColoring greedy_two_color(const Window& e, const std::vector<Interval>& R, PassOrder order) {
    TwoColoring out;
    out.vertices = e.members();
    out.graph = conflict_graph(e, R);
    const std::size_t n = out.vertices.size();
    std::unordered_map<u64, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[out.vertices[i]] = i;
    out.color.assign(n, 0);

    const bool greedy = order == PassOrder::Ascending && out.graph.max_backward_degree <= 1;
    if (greedy) {
        std::vector<std::size_t> back(n, n);
        for (const auto& [a, b] : out.graph.edges) back[index[a]] = index[b];
        for (std::size_t i = 0; i < n; ++i) out.color[i] = back[i] == n ? 1 : 3 - out.color[back[i]];
    } else {
        out.fallback = out.graph.max_backward_degree > 1;
        std::vector<std::vector<std::size_t>> adj(n);
        for (const auto& [a, b] : out.graph.edges) {
            adj[index[a]].push_back(index[b]);
            adj[index[b]].push_back(index[a]);
        }
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t root = order == PassOrder::Ascending ? step : n - 1 - step;
            if (out.color[root]) continue;
            out.color[root] = 1;
            std::deque<std::size_t> q{root};
            while (!q.empty()) {
                const std::size_t u = q.front();
                q.pop_front();
                for (std::size_t v : adj[u]) {
                    if (!out.color[v]) {
                        out.color[v] = 3 - out.color[u];
                        q.push_back(v);
                    } else if (out.color[v] == out.color[u]) {
                        throw DomainError("not 2-colorable on window: odd cycle through " +
                                          std::to_string(out.vertices[u]) + " and " + std::to_string(out.vertices[v]));
                    }
                }
            }
        }
    }

    for (const auto& [a, b] : out.graph.edges)
        if (out.color[index[a]] == out.color[index[b]])
            throw VerificationError("conflict edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") is monochromatic");

    // brute force: every a in class i, every d in R, look for a - d in class i
    for (std::size_t i = 0; i < n; ++i) {
        const u64 a = out.vertices[i];
        for (const Interval& I : R)
            for (u64 d = I.lo; d <= I.hi && d < a; ++d) {
                const auto it = index.find(a - d);
                if (it != index.end() && out.color[it->second] == out.color[i]) ++out.hits[out.color[i] - 1];
            }
    }
    out.verified = out.hits[0] == 0 && out.hits[1] == 0;
    if (!out.verified) throw VerificationError("R meets E_i - E_i on the window");
    return out;
}

}  // namespace reclab
