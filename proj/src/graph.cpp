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

#include "reclab/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "reclab/errors.hpp"

namespace reclab {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64) {
    if (n > kMaxGraphVertices)
        throw BudgetError("graph has " + std::to_string(n) + " vertices, above the 2^14 guard", kMaxGraphVertices);
    rows_.assign(n_ * words_, 0);
    labels.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) labels[i] = i;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw DomainError("self-loop at vertex " + std::to_string(labels[a]));
    rows_[a * words_ + (b >> 6)] |= u64{1} << (b & 63);
    rows_[b * words_ + (a >> 6)] |= u64{1} << (a & 63);
}

std::size_t Graph::degree(std::size_t a) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[a * words_ + w]);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t a = 0; a < n_; ++a) total += degree(a);
    return total / 2;
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
    Graph g(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        g.labels[i] = labels[keep[i]];
        for (std::size_t j = 0; j < i; ++j)
            if (adjacent(keep[i], keep[j])) g.add_edge(i, j);
    }
    return g;
}

Graph cayley_integer(const std::vector<u64>& vertices, const std::vector<u64>& S) {
    for (u64 s : S)
        if (s == 0) throw DomainError("self-loop: 0 is in the generator set");
    std::vector<u64> v = vertices;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    Graph g(v.size());
    std::unordered_map<u64, std::size_t> index;
    for (std::size_t i = 0; i < v.size(); ++i) {
        g.labels[i] = v[i];
        index[v[i]] = i;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        for (u64 s : S) {
            if (v[i] > UINT64_MAX - s) continue;
            const auto it = index.find(v[i] + s);
            if (it != index.end()) g.add_edge(i, it->second);
        }
    return g;
}

Graph cayley_f2(unsigned d, const std::vector<u64>& S) {
    if (d > 14) throw BudgetError("dimension above 14 exceeds the vertex guard", 14);
    const u64 n = u64{1} << d;
    for (u64 s : S) {
        if (s == 0) throw DomainError("self-loop: the zero vector is in the generator set");
        if (s >= n) throw DomainError("generator outside F_2^" + std::to_string(d));
    }
    Graph g(n);
    for (u64 x = 0; x < n; ++x)
        for (u64 s : S)
            if ((x ^ s) > x) g.add_edge(x, x ^ s);
    return g;
}

std::string to_adjacency_text(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.size() << '\n';
    for (std::size_t a = 0; a < g.size(); ++a) {
        os << g.labels[a] << ':';
        for (std::size_t b = 0; b < g.size(); ++b)
            if (g.adjacent(a, b)) os << ' ' << g.labels[b];
        os << '\n';
    }
    return os.str();
}

}  // namespace reclab
