#include "vat/parameters.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace vat {

namespace {

struct BfsColoring {
    std::vector<int> color;        // 0/1 by BFS parity, -1 unvisited
    std::vector<int> parent;
    std::vector<int> component;    // component id per vertex
    std::vector<int> roots;        // one root per component
    std::optional<std::pair<int, int>> conflict; // same-color edge, if any
};

BfsColoring bfs_two_color(const Graph& g) {
    const int n = g.order();
    BfsColoring r;
    r.color.assign(n, -1);
    r.parent.assign(n, -1);
    r.component.assign(n, -1);
    for (int s = 0; s < n && !r.conflict; ++s) {
        if (r.color[s] != -1) continue;
        int comp = static_cast<int>(r.roots.size());
        r.roots.push_back(s);
        r.color[s] = 0;
        r.component[s] = comp;
        std::deque<int> q{s};
        while (!q.empty() && !r.conflict) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (r.color[v] == -1) {
                    r.color[v] = 1 - r.color[u];
                    r.parent[v] = u;
                    r.component[v] = comp;
                    q.push_back(v);
                } else if (r.color[v] == r.color[u]) {
                    r.conflict = std::make_pair(u, v);
                }
            }
        }
    }
    return r;
}

// Extract a simple odd cycle from a same-parity BFS edge (u, v): walk both
// endpoints up to their lowest common ancestor.
std::vector<int> odd_cycle_witness(const BfsColoring& bfs, int u, int v) {
    std::vector<int> pu{u}, pv{v};
    auto depth = [&](int x) {
        int d = 0;
        for (int y = x; bfs.parent[y] != -1; y = bfs.parent[y]) ++d;
        return d;
    };
    int du = depth(u), dv = depth(v);
    int a = u, b = v;
    while (du > dv) {
        a = bfs.parent[a];
        pu.push_back(a);
        --du;
    }
    while (dv > du) {
        b = bfs.parent[b];
        pv.push_back(b);
        --dv;
    }
    while (a != b) {
        a = bfs.parent[a];
        b = bfs.parent[b];
        pu.push_back(a);
        pv.push_back(b);
    }
    // pu ends at the LCA; append pv reversed without repeating it.
    std::vector<int> cycle(pu);
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
    return cycle;
}

} // namespace

std::optional<Bipartition> try_bipartition(const Graph& g) {
    BfsColoring bfs = bfs_two_color(g);
    if (bfs.conflict) return std::nullopt;
    const int n = g.order();
    const int comps = static_cast<int>(bfs.roots.size());
    std::vector<int> size0(comps, 0), size1(comps, 0);
    for (int v = 0; v < n; ++v)
        (bfs.color[v] == 0 ? size0 : size1)[bfs.component[v]]++;
    Bipartition out;
    out.side.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int c = bfs.component[v];
        // BFS color 0 holds the component root (its smallest vertex), so a
        // tie keeps the root's side as side 0.
        bool flip = size1[c] < size0[c];
        out.side[v] = flip ? 1 - bfs.color[v] : bfs.color[v];
    }
    return out;
}

bool is_bipartite(const Graph& g) { return try_bipartition(g).has_value(); }

int p_value(const Graph& f) {
    BfsColoring bfs = bfs_two_color(f);
    if (bfs.conflict)
        throw non_bipartite_error("p_value: graph is not bipartite",
                                  odd_cycle_witness(bfs, bfs.conflict->first,
                                                    bfs.conflict->second));
    const int comps = static_cast<int>(bfs.roots.size());
    std::vector<int> size0(comps, 0), size1(comps, 0);
    for (int v = 0; v < f.order(); ++v)
        (bfs.color[v] == 0 ? size0 : size1)[bfs.component[v]]++;
    int p = 0;
    for (int c = 0; c < comps; ++c) p += std::min(size0[c], size1[c]);
    return p;
}

namespace {

// k-colorability backtracking with color-symmetry breaking: vertex i may
// use at most one fresh color beyond those already on earlier vertices.
bool colorable(const Graph& g, int k, std::int64_t& nodes, std::int64_t budget) {
    const int n = g.order();
    if (n == 0) return true;
    if (k <= 0) return g.edge_count() == 0 && n == 0;

    // Static order: descending degree gives early conflicts.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> color(n, -1);
    std::function<bool(int, int)> rec = [&](int step, int used) -> bool {
        if (step == n) return true;
        if (++nodes > budget) throw budget_error("chromatic_number: node budget exceeded");
        int v = order[step];
        int cap = std::min(k, used + 1);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (rec(step + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(0, 0);
}

} // namespace

int chromatic_number(const Graph& g, const Limits& limits) {
    if (g.order() > limits.chromatic_max_order)
        throw budget_error("chromatic_number: order exceeds configured budget");
    if (g.order() == 0) return 0;
    std::int64_t nodes = 0;
    for (int k = 1; k <= g.order(); ++k)
        if (colorable(g, k, nodes, limits.node_budget)) return k;
    return g.order(); // unreachable: K_n is n-colorable
}

std::optional<std::vector<int>> hom_exists(const Graph& f, const Graph& b,
                                           const Limits& limits) {
    const int k = f.order();
    const int n = b.order();
    if (k == 0) return std::vector<int>{};
    if (n == 0) return std::nullopt;
    if (f.edge_count() > 0 && b.edge_count() == 0) return std::nullopt;

    // Order f's vertices so each (after the first per component) touches a
    // previously mapped vertex where possible.
    std::vector<int> order;
    order.reserve(k);
    std::vector<char> placed(k, 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : order)
                if (f.adjacent(u, v)) ++conn;
            if (conn > best_conn || (conn == best_conn && f.degree(v) > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = f.degree(v);
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }

    std::vector<int> image(k, -1);
    std::int64_t nodes = 0;
    std::function<bool(int)> rec = [&](int step) -> bool {
        if (step == k) return true;
        int v = order[step];
        for (int w = 0; w < n; ++w) {
            bool ok = true;
            for (int s = 0; s < step; ++s)
                if (f.adjacent(order[s], v) && !b.adjacent(image[order[s]], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (++nodes > limits.node_budget)
                throw budget_error("hom_exists: node budget exceeded");
            image[v] = w;
            if (rec(step + 1)) return true;
            image[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return image;
}

std::optional<int> odd_girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    // Shortest odd closed walk through any root equals the odd girth.
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u))
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        for (const auto& [u, v] : g.edges()) {
            if (dist[u] == -1 || dist[v] == -1 || dist[u] != dist[v]) continue;
            int len = dist[u] + dist[v] + 1;
            if (best == -1 || len < best) best = len;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

int gamma(const Graph& f, const Limits& limits) {
    int chi = chromatic_number(f, limits);
    if (chi != 3)
        throw domain_error("gamma: defined for 3-chromatic graphs only (chi = " +
                           std::to_string(chi) + ")");
    int og = *odd_girth(f); // exists: chi = 3 forces an odd cycle
    int upper = (og - 1) / 2 + 1;
    int result = 2; // hom into K_3 = C_3 exists since chi(f) = 3
    for (int k = 3; k <= upper; ++k) {
        if (hom_exists(f, cycle(2 * k - 1), limits))
            result = k;
        else
            break;
    }
    return result;
}

} // namespace vat
