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

#include <utility>
#include <vector>

#include "reclab/generators.hpp"
#include "reclab/kernels.hpp"

namespace reclab {

using kernels::Interval;

// I_n = [f_n, f_n + n] for n = 2, 3, ...; the f values are members of E in
// strictly increasing order. Overlapping intervals raise GrowthTooSlow.
std::vector<Interval> build_thick_R(const SetFamily& E, const std::vector<u64>& f_values);

struct ConflictGraph {
    std::vector<std::pair<u64, u64>> edges;  // (a, b), a > b, a - b in R; sorted
    std::size_t max_backward_degree = 0;
    std::size_t vertices = 0;
    std::size_t conflicted = 0;  // vertices with at least one backward neighbour
    bool regime_ok = false;      // backward degree <= 1 and at most half the vertices conflicted
};

ConflictGraph conflict_graph(const Window& e, const std::vector<Interval>& R);

enum class PassOrder { Ascending, Descending };

struct TwoColoring {
    std::vector<u64> vertices;    // E on the window, ascending
    std::vector<unsigned> color;  // 1 or 2, aligned with vertices
    ConflictGraph graph;
    bool fallback = false;        // general bipartite pass instead of the greedy rule
    u64 hits[2] = {0, 0};         // brute-force |R ∩ (E_i - E_i)| pairs per class
    bool verified = false;
};

// Ascending: c(a) = 1 without a smaller neighbour, else the other colour of
// that neighbour. Descending, or any graph outside the greedy regime,
// colours each component by BFS from its first vertex in that order. Throws
// DomainError("not 2-colorable on window") on an odd cycle.
TwoColoring greedy_two_color(const Window& e, const std::vector<Interval>& R, PassOrder order = PassOrder::Ascending);

}  // namespace reclab
