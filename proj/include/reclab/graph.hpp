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

#include <cstdint>
#include <string>
#include <vector>

#include "reclab/arith.hpp"

namespace reclab {

inline constexpr std::size_t kMaxGraphVertices = std::size_t{1} << 14;

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// `labels` keeps the integer (or bit-vector) each vertex stands for.
class Graph {
public:
    explicit Graph(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t row_words() const { return words_; }

    void add_edge(std::size_t a, std::size_t b);
    bool adjacent(std::size_t a, std::size_t b) const {
        return (rows_[a * words_ + (b >> 6)] >> (b & 63)) & 1;
    }
    const u64* row(std::size_t a) const { return rows_.data() + a * words_; }
    std::size_t degree(std::size_t a) const;
    std::size_t edge_count() const;

    Graph induced(const std::vector<std::size_t>& keep) const;

    std::vector<u64> labels;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<u64> rows_;
};

// Cay(V, S) over the integers: x ~ y iff |x - y| in S. S must not contain 0.
Graph cayley_integer(const std::vector<u64>& vertices, const std::vector<u64>& S);

// Cay(F_2^d, S): x ~ y iff x XOR y in S. S must not contain the zero vector.
Graph cayley_f2(unsigned d, const std::vector<u64>& S);

// "n <count>" then one line per vertex: "<label>: <neighbour labels>".
std::string to_adjacency_text(const Graph& g);

}  // namespace reclab
