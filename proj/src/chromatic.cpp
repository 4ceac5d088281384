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

#include "reclab/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "reclab/errors.hpp"

namespace reclab {

namespace {

using Bits = std::vector<u64>;

std::size_t popcount_and(const u64* a, const Bits& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < b.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

// Greedy clique grown from the highest-degree vertices; a handful of starts.
std::vector<std::size_t> greedy_clique(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> best;
    const std::size_t starts = std::min<std::size_t>(n, 64);
    for (std::size_t si = 0; si < starts; ++si) {
        std::vector<std::size_t> clique{order[si]};
        Bits cand(g.row(order[si]), g.row(order[si]) + g.row_words());
        while (true) {
            std::size_t pick = n, pick_score = 0;
            for (std::size_t w = 0; w < cand.size(); ++w) {
                u64 bits = cand[w];
                while (bits) {
                    const std::size_t v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::size_t score = popcount_and(g.row(v), cand) + 1;
                    if (pick == n || score > pick_score) {
                        pick = v;
                        pick_score = score;
                    }
                }
            }
            if (pick == n) break;
            clique.push_back(pick);
            for (std::size_t w = 0; w < cand.size(); ++w) cand[w] &= g.row(pick)[w];
        }
        if (clique.size() > best.size()) best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

// BFS 2-colouring; on failure returns an odd cycle.
std::vector<std::size_t> find_odd_cycle(const Graph& g, bool& bipartite) {
    const std::size_t n = g.size();
    std::vector<int> side(n, -1);
    std::vector<std::size_t> parent(n, n), depth(n, 0);
    bipartite = true;
    for (std::size_t root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<std::size_t> q{root};
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push_back(v);
                } else if (side[v] == side[u]) {
                    bipartite = false;
                    std::vector<std::size_t> left{u}, right{v};
                    std::size_t a = u, b = v;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        } else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();  // the common ancestor is already in `left`
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    return left;
                }
            }
        }
    }
    return {};
}

std::vector<unsigned> dsatur_greedy(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<unsigned> color(n, 0);
    std::vector<std::vector<bool>> seen(n);
    std::vector<unsigned> sat(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u) {
            if (color[u]) continue;
            if (v == n || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(u) > g.degree(v))) v = u;
        }
        unsigned c = 1;
        while (c < seen[v].size() && seen[v][c]) ++c;
        color[v] = c;
        for (std::size_t u = 0; u < n; ++u) {
            if (!g.adjacent(v, u) || color[u]) continue;
            if (seen[u].size() <= c) seen[u].resize(c + 1, false);
            if (!seen[u][c]) {
                seen[u][c] = true;
                ++sat[u];
            }
        }
    }
    return color;
}

class Search {
public:
    Search(const Graph& g, unsigned lower, unsigned upper, std::vector<unsigned> best, u64 budget)
        : g_(g), n_(g.size()), lower_(lower), best_k_(upper), best_(std::move(best)), budget_(budget),
          color_(n_, 0), count_(n_ * 64, 0), satmask_(n_, 0), degree_(n_) {
        for (std::size_t v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    }

    void precolor(const std::vector<std::size_t>& clique) {
        unsigned c = 0;
        for (std::size_t v : clique) assign(v, ++c);
        colored_ = clique.size();
        used_ = c;
    }

    bool run() {
        dfs();
        return !aborted_;
    }

    unsigned best_k() const { return best_k_; }
    const std::vector<unsigned>& best() const { return best_; }
    u64 nodes() const { return nodes_; }

private:
    void assign(std::size_t v, unsigned c) {
        color_[v] = c;
        const u64* row = g_.row(v);
        for (std::size_t w = 0; w < g_.row_words(); ++w) {
            u64 bits = row[w];
            while (bits) {
                const std::size_t u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (count_[u * 64 + c - 1]++ == 0) satmask_[u] |= u64{1} << (c - 1);
            }
        }
    }

    void unassign(std::size_t v, unsigned c) {
        color_[v] = 0;
        const u64* row = g_.row(v);
        for (std::size_t w = 0; w < g_.row_words(); ++w) {
            u64 bits = row[w];
            while (bits) {
                const std::size_t u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (--count_[u * 64 + c - 1] == 0) satmask_[u] &= ~(u64{1} << (c - 1));
            }
        }
    }

    void dfs() {
        if (aborted_ || best_k_ <= lower_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (colored_ == n_) {
            best_k_ = used_;
            best_ = color_;
            return;
        }
        std::size_t v = n_;
        int vs = -1;
        for (std::size_t u = 0; u < n_; ++u) {
            if (color_[u]) continue;
            const int s = std::popcount(satmask_[u]);
            if (s > vs || (s == vs && degree_[u] > degree_[v])) {
                v = u;
                vs = s;
            }
        }
        // a vertex already seeing best_k-1 colours cannot improve the bound
        if (static_cast<unsigned>(vs) >= best_k_ - 1) return;
        const unsigned limit = std::min(used_ + 1, best_k_ - 1);
        for (unsigned c = 1; c <= limit; ++c) {
            if (satmask_[v] >> (c - 1) & 1) continue;
            const unsigned prev_used = used_;
            used_ = std::max(used_, c);
            assign(v, c);
            ++colored_;
            dfs();
            --colored_;
            unassign(v, c);
            used_ = prev_used;
            if (aborted_ || best_k_ <= lower_) return;
        }
    }

    const Graph& g_;
    std::size_t n_;
    unsigned lower_;
    unsigned best_k_;
    std::vector<unsigned> best_;
    u64 budget_;
    std::vector<unsigned> color_;
    std::vector<unsigned> count_;
    std::vector<u64> satmask_;
    std::vector<std::size_t> degree_;
    std::size_t colored_ = 0;
    unsigned used_ = 0;
    u64 nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& opt) {
    ChromaticResult res;
    const std::size_t n = g.size();
    if (n == 0) {
        res.exact = true;
        return res;
    }
    res.clique = greedy_clique(g);
    bool bipartite = true;
    res.odd_cycle = find_odd_cycle(g, bipartite);
    res.lower_bound = static_cast<unsigned>(res.clique.size());
    if (!bipartite) res.lower_bound = std::max(res.lower_bound, 3u);

    res.coloring = dsatur_greedy(g);
    res.chi = *std::max_element(res.coloring.begin(), res.coloring.end());
    if (bipartite) {
        // BFS sides give an optimal colouring directly
        const bool has_edges = g.edge_count() > 0;
        std::vector<int> side(n, -1);
        for (std::size_t root = 0; root < n; ++root) {
            if (side[root] != -1) continue;
            side[root] = 0;
            std::deque<std::size_t> q{root};
            while (!q.empty()) {
                const std::size_t u = q.front();
                q.pop_front();
                for (std::size_t v = 0; v < n; ++v)
                    if (g.adjacent(u, v) && side[v] == -1) {
                        side[v] = 1 - side[u];
                        q.push_back(v);
                    }
            }
        }
        for (std::size_t v = 0; v < n; ++v) res.coloring[v] = has_edges ? static_cast<unsigned>(side[v]) + 1 : 1;
        res.chi = has_edges ? 2 : 1;
        res.lower_bound = res.chi;
        res.exact = true;
        return res;
    }
    if (res.chi <= res.lower_bound || res.chi > 64) {
        res.exact = res.chi <= res.lower_bound;
        return res;
    }
    Search search(g, res.lower_bound, res.chi, res.coloring, opt.node_budget);
    search.precolor(res.clique);
    const bool finished = search.run();
    res.nodes = search.nodes();
    res.chi = search.best_k();
    res.coloring = search.best();
    res.exact = finished || res.chi <= res.lower_bound;
    if (res.exact) res.lower_bound = res.chi;
    return res;
}

bool is_proper_coloring(const Graph& g, const std::vector<unsigned>& coloring) {
    if (coloring.size() != g.size()) return false;
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (coloring[a] == 0) return false;
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b) && coloring[a] == coloring[b]) return false;
    }
    return true;
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_odd_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

}  // namespace reclab
