#include "vat/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "vat/graph6.hpp"

namespace vat {

namespace {

// Minimum-bit-string search. Positions are grouped into ascending-degree
// classes; a vertex may only occupy a position of its own degree class,
// which is sound because the degree sequence is an isomorphism invariant.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> pos_degree;     // required degree at each position
    std::vector<int> perm;           // position -> original vertex
    std::vector<char> used;
    std::vector<std::uint64_t> cur;  // cur[i] = adjacency bits of position i vs positions < i
    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;
    bool have_best = false;
    std::int64_t nodes = 0;
    std::int64_t node_budget;

    CanonSearch(const Graph& graph, std::int64_t budget)
        : g(graph), n(graph.order()), node_budget(budget) {
        perm.assign(n, -1);
        used.assign(n, 0);
        cur.assign(n, 0);
        best.assign(n, 0);
        best_perm.assign(n, 0);
        pos_degree.resize(n);
        std::vector<int> degs(n);
        for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
        std::sort(degs.begin(), degs.end());
        pos_degree = degs;
    }

    bool prefix_equal(int len) const {
        for (int i = 0; i < len; ++i)
            if (cur[i] != best[i]) return false;
        return true;
    }

    void run() {
        if (n == 0) {
            have_best = true;
            return;
        }
        descend(0);
    }

    void descend(int pos) {
        if (pos == n) {
            best = cur;
            best_perm = perm;
            have_best = true;
            return;
        }
        if (++nodes > node_budget)
            throw budget_error("canonicalize: node budget exceeded");

        // Try candidates in ascending column order so the leftmost leaf is
        // already near-minimal and pruning bites early.
        std::vector<std::pair<std::uint64_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != pos_degree[pos]) continue;
            std::uint64_t col = 0;
            for (int j = 0; j < pos; ++j)
                if (g.adjacent(v, perm[j])) col |= std::uint64_t{1} << j;
            cands.emplace_back(col, v);
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& [col, v] : cands) {
            // Tightness is recomputed per candidate: a descend below may
            // have replaced `best`, and candidates are sorted by column,
            // so under an equal prefix everything after a worse column is
            // worse too.
            if (have_best && prefix_equal(pos) && col > best[pos]) break;
            perm[pos] = v;
            used[v] = 1;
            cur[pos] = col;
            descend(pos + 1);
            used[v] = 0;
            perm[pos] = -1;
        }
        cur[pos] = 0;
    }
};

} // namespace

Graph canonicalize(const Graph& g, const Limits& limits) {
    const int n = g.order();
    if (n > 64)
        throw param_error("canonicalize: supported up to 64 vertices");
    if (n <= 1) return g;
    CanonSearch search(g, limits.node_budget);
    search.run();
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (search.best[i] >> j & 1) out.add_edge(j, i);
    return out;
}

std::string canonical_graph6(const Graph& g, const Limits& limits) {
    return graph6_encode(canonicalize(g, limits));
}

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonicalize(a, limits) == canonicalize(b, limits);
}

} // namespace vat
