#include "vat/subgraph.hpp"

#include <algorithm>

namespace vat {

namespace detail {

namespace {

// Pattern vertex ordering: highest degree first, then greedily the vertex
// with the most already-placed neighbors (degree, then label, as ties).
std::vector<int> pattern_order(const Graph& p) {
    const int k = p.order();
    std::vector<int> order;
    order.reserve(k);
    std::vector<char> placed(k, 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : order)
                if (p.adjacent(u, v)) ++conn;
            if (conn > best_conn || (conn == best_conn && p.degree(v) > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = p.degree(v);
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

} // namespace

bool for_each_embedding(const Graph& host, const Graph& pattern, const Limits& limits,
                        const std::function<bool(const Embedding&)>& visit) {
    const int k = pattern.order();
    const int n = host.order();
    if (k > n) return true;

    const std::vector<int> order = pattern_order(pattern);
    // placed_nbrs[step] = indices < step whose pattern vertex neighbors order[step]
    std::vector<std::vector<int>> placed_nbrs(k);
    for (int step = 0; step < k; ++step)
        for (int prev = 0; prev < step; ++prev)
            if (pattern.adjacent(order[prev], order[step])) placed_nbrs[step].push_back(prev);

    std::vector<int> image(k, -1); // by step index
    std::vector<char> used(n, 0);
    std::int64_t nodes = 0;

    // Iterative alternative would obscure the backtracking; recursion depth <= k.
    std::function<bool(int)> rec = [&](int step) -> bool {
        if (step == k) {
            Embedding e;
            e.map.assign(k, -1);
            for (int s = 0; s < k; ++s) e.map[order[s]] = image[s];
            return visit(e);
        }
        const int pv = order[step];
        for (int w = 0; w < n; ++w) {
            if (used[w] || host.degree(w) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int prev : placed_nbrs[step])
                if (!host.adjacent(image[prev], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (++nodes > limits.node_budget)
                throw budget_error("subgraph search: node budget exceeded");
            image[step] = w;
            used[w] = 1;
            bool cont = rec(step + 1);
            used[w] = 0;
            image[step] = -1;
            if (!cont) return false;
        }
        return true;
    };
    return rec(0);
}

} // namespace detail

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern,
                                           const Limits& limits) {
    std::optional<Embedding> found;
    detail::for_each_embedding(host, pattern, limits, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

} // namespace vat
