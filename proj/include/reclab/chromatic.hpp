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

#include <vector>

#include "reclab/graph.hpp"

namespace reclab {

struct ChromaticOptions {
    u64 node_budget = 20'000'000;  // branch-and-bound nodes before giving up on exactness
};

struct ChromaticResult {
    unsigned chi = 0;          // colours used by `coloring`; equals the chromatic number when exact
    unsigned lower_bound = 0;  // max(clique size, 3 if an odd cycle exists)
    bool exact = false;
    std::vector<unsigned> coloring;      // per vertex, colours 1..chi
    std::vector<std::size_t> clique;     // vertex indices, pairwise adjacent
    std::vector<std::size_t> odd_cycle;  // closed walk v0..vk (v0 ~ vk), odd length; empty if bipartite
    u64 nodes = 0;
};

// Exact chromatic number by DSATUR branch and bound, seeded with a clique
// lower bound and an odd-cycle test. Deterministic for a fixed node budget.
ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& opt = {});

// Independent checks of the certificates.
bool is_proper_coloring(const Graph& g, const std::vector<unsigned>& coloring);
bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices);
bool is_odd_cycle(const Graph& g, const std::vector<std::size_t>& cycle);

}  // namespace reclab
