#include "vat/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "vat/parameters.hpp"
#include "vat/subgraph.hpp"

namespace vat {

namespace {

// edge_index[u][v] = lexicographic edge index, -1 for non-edges.
std::vector<std::vector<int>> edge_index_matrix(const Graph& g) {
    std::vector<std::vector<int>> idx(g.order(), std::vector<int>(g.order(), -1));
    int i = 0;
    for (const auto& [u, v] : g.edges()) {
        idx[u][v] = idx[v][u] = i;
        ++i;
    }
    return idx;
}

} // namespace

int EdgeColoring::color_count() const {
    int mx = -1;
    for (int c : colors) mx = std::max(mx, c);
    return mx + 1;
}

bool EdgeColoring::is_proper() const {
    if (static_cast<int>(colors.size()) != graph.edge_count()) return false;
    for (int c : colors)
        if (c < 0) return false;
    // dense color ids 0..c-1
    std::vector<char> seen(colors.size() + 1, 0);
    for (int c : colors) {
        if (c >= static_cast<int>(seen.size())) return false;
        seen[c] = 1;
    }
    for (int c = 0; c < color_count(); ++c)
        if (!seen[c]) return false;
    // edges sharing a vertex have distinct colors
    auto es = graph.edges();
    std::vector<std::vector<int>> at(graph.order());
    for (std::size_t i = 0; i < es.size(); ++i) {
        at[es[i].first].push_back(colors[i]);
        at[es[i].second].push_back(colors[i]);
    }
    for (auto& cs : at) {
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
    }
    return true;
}

bool verify_rainbow_copy(const EdgeColoring& coloring, const Graph& f,
                         const RainbowCopy& copy) {
    if (!is_valid_embedding(coloring.graph, f, copy.embedding)) return false;
    auto idx = edge_index_matrix(coloring.graph);
    auto fe = f.edges();
    if (copy.colors.size() != fe.size()) return false;
    std::set<int> distinct;
    for (std::size_t i = 0; i < fe.size(); ++i) {
        int hu = copy.embedding.map[fe[i].first];
        int hv = copy.embedding.map[fe[i].second];
        int e = idx[hu][hv];
        if (e < 0 || coloring.colors[e] != copy.colors[i]) return false;
        if (!distinct.insert(copy.colors[i]).second) return false;
    }
    return true;
}

void enumerate_proper_colorings(const Graph& g, const Limits& limits,
                                const std::function<bool(const EdgeColoring&)>& visit) {
    const int m = g.edge_count();
    if (m > limits.edge_budget)
        throw budget_error("enumerate_proper_colorings: edge budget exceeded");
    auto es = g.edges();
    // Earlier edges sharing a vertex with edge i.
    std::vector<std::vector<int>> conflicts(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (es[i].first == es[j].first || es[i].first == es[j].second ||
                es[i].second == es[j].first || es[i].second == es[j].second)
                conflicts[i].push_back(j);

    std::vector<int> colors(m, -1);
    std::int64_t nodes = 0;
    std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == m) {
            EdgeColoring c{g, colors};
            return visit(c);
        }
        if (++nodes > limits.node_budget)
            throw budget_error("enumerate_proper_colorings: node budget exceeded");
        // c == used is the fresh color allowed by restricted growth.
        for (int c = 0; c <= used; ++c) {
            if (c < used) {
                bool ok = true;
                for (int j : conflicts[i])
                    if (colors[j] == c) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            colors[i] = c;
            if (!rec(i + 1, std::max(used, c + 1))) return false;
            colors[i] = -1;
        }
        return true;
    };
    rec(0, 0);
}

std::vector<EdgeColoring> enumerate_proper_colorings(const Graph& g, const Limits& limits) {
    std::vector<EdgeColoring> out;
    enumerate_proper_colorings(g, limits, [&](const EdgeColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::optional<RainbowCopy> find_rainbow_copy(const EdgeColoring& coloring, const Graph& f,
                                             const Limits& limits) {
    const Graph& host = coloring.graph;
    const int k = f.order();
    if (k > host.order()) return std::nullopt;
    auto idx = edge_index_matrix(host);
    const int ncolors = std::max(coloring.color_count(), 1);

    // Pattern vertex order: most placed neighbors first (see subgraph.cpp).
    std::vector<int> order;
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
    std::vector<char> used_vertex(host.order(), 0);
    std::vector<char> used_color(ncolors, 0);
    std::int64_t nodes = 0;

    std::function<bool(int)> rec = [&](int step) -> bool {
        if (step == k) return true;
        int v = order[step];
        for (int w = 0; w < host.order(); ++w) {
            if (used_vertex[w] || host.degree(w) < f.degree(v)) continue;
            bool ok = true;
            std::vector<int> new_cols;
            for (int s = 0; s < step && ok; ++s) {
                int u = order[s];
                if (!f.adjacent(u, v)) continue;
                int e = idx[image[u]][w];
                if (e < 0 || used_color[coloring.colors[e]]) {
                    ok = false;
                    break;
                }
                new_cols.push_back(coloring.colors[e]);
            }
            if (!ok) continue;
            if (++nodes > limits.node_budget)
                throw budget_error("find_rainbow_copy: node budget exceeded");
            image[v] = w;
            used_vertex[w] = 1;
            for (int c : new_cols) used_color[c] = 1;
            if (rec(step + 1)) return true;
            for (int c : new_cols) used_color[c] = 0;
            used_vertex[w] = 0;
            image[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;

    RainbowCopy copy;
    copy.embedding.map = image;
    for (const auto& [u, v] : f.edges())
        copy.colors.push_back(coloring.colors[idx[image[u]][image[v]]]);
    return copy;
}

namespace {

// Distinct copies of f inside g as sorted edge-index sets.
std::vector<std::vector<int>> copies_as_edge_sets(const Graph& g, const Graph& f,
                                                  const Limits& limits) {
    auto idx = edge_index_matrix(g);
    std::set<std::vector<int>> seen;
    detail::for_each_embedding(g, f, limits, [&](const Embedding& e) {
        std::vector<int> edges;
        for (const auto& [u, v] : f.edges()) edges.push_back(idx[e.map[u]][e.map[v]]);
        std::sort(edges.begin(), edges.end());
        seen.insert(std::move(edges));
        return true;
    });
    return {seen.begin(), seen.end()};
}

} // namespace

std::optional<EdgeColoring> admits_coloring_without_rainbow(const Graph& g, const Graph& f,
                                                            const Limits& limits) {
    const int m = g.edge_count();
    if (m > limits.edge_budget)
        throw budget_error("admits_coloring_without_rainbow: edge budget exceeded");

    auto copies = copies_as_edge_sets(g, f, limits);
    // An edgeless copy is rainbow under any coloring.
    for (const auto& c : copies)
        if (c.empty()) return std::nullopt;

    auto es = g.edges();
    std::vector<std::vector<int>> conflicts(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (es[i].first == es[j].first || es[i].first == es[j].second ||
                es[i].second == es[j].first || es[i].second == es[j].second)
                conflicts[i].push_back(j);
    std::vector<std::vector<int>> copies_with_edge(m);
    for (std::size_t c = 0; c < copies.size(); ++c)
        for (int e : copies[c]) copies_with_edge[e].push_back(static_cast<int>(c));

    std::vector<int> colors(m, -1);
    std::vector<int> colored(copies.size(), 0);
    std::int64_t nodes = 0;

    // True iff copy c is fully colored with pairwise distinct colors.
    auto rainbow_when_complete = [&](std::size_t c) {
        std::vector<int> cs;
        for (int e : copies[c]) cs.push_back(colors[e]);
        std::sort(cs.begin(), cs.end());
        return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
    };

    std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == m) return true;
        if (++nodes > limits.node_budget)
            throw budget_error("admits_coloring_without_rainbow: node budget exceeded");
        for (int c = 0; c <= used; ++c) {
            if (c < used) {
                bool compatible = true;
                for (int j : conflicts[i])
                    if (colors[j] == c) {
                        compatible = false;
                        break;
                    }
                if (!compatible) continue;
            }
            colors[i] = c;
            bool pruned = false;
            for (int cp : copies_with_edge[i]) {
                if (++colored[cp] == static_cast<int>(copies[cp].size()) &&
                    rainbow_when_complete(cp))
                    pruned = true;
            }
            if (!pruned && rec(i + 1, std::max(used, c + 1))) return true;
            for (int cp : copies_with_edge[i]) --colored[cp];
            colors[i] = -1;
        }
        return false;
    };
    if (!rec(0, 0)) return std::nullopt;
    return EdgeColoring{g, colors};
}

std::optional<RainbowCopy> greedy_rainbow_embed_bipartite(const EdgeColoring& coloring,
                                                          const Graph& f) {
    const Graph& host = coloring.graph;
    const int p = p_value(f); // raises non_bipartite_error for bad f

    // Identify the host's sides and check it is K_{p, q} with that p.
    std::vector<int> a_side, b_side;
    if (host.edge_count() == 0) {
        if (p != 0)
            throw param_error("greedy_rainbow_embed_bipartite: host must be K_{p,q} "
                              "with p = p_value(f)");
        // K_{0, q}: everything sits on the q-side.
        for (int v = 0; v < host.order(); ++v) b_side.push_back(v);
    } else {
        auto bip = try_bipartition(host);
        if (!bip)
            throw param_error("greedy_rainbow_embed_bipartite: host is not bipartite");
        for (int v = 0; v < host.order(); ++v)
            (bip->side[v] == bip->side[0] ? a_side : b_side).push_back(v);
        if (host.edge_count() !=
            static_cast<int>(a_side.size()) * static_cast<int>(b_side.size()))
            throw param_error("greedy_rainbow_embed_bipartite: host is not complete bipartite");
        if (static_cast<int>(b_side.size()) == p && static_cast<int>(a_side.size()) != p)
            std::swap(a_side, b_side);
        if (static_cast<int>(a_side.size()) != p)
            throw param_error("greedy_rainbow_embed_bipartite: host small side != p_value(f)");
    }

    auto fbip = try_bipartition(f);
    std::vector<int> class0, class1;
    for (int v = 0; v < f.order(); ++v) (fbip->side[v] == 0 ? class0 : class1).push_back(v);

    auto idx = edge_index_matrix(host);
    const int ncolors = std::max(coloring.color_count(), 1);
    std::vector<char> used_color(ncolors, 0);
    std::vector<char> used_vertex(host.order(), 0);
    std::vector<int> image(f.order(), -1);

    // The small color class of f occupies the p-side outright.
    for (std::size_t i = 0; i < class0.size(); ++i) {
        image[class0[i]] = a_side[i];
        used_vertex[a_side[i]] = 1;
    }
    // Place the rest one at a time on the q-side, avoiding vertices whose
    // connecting edges repeat a color already used.
    for (int v : class1) {
        int chosen = -1;
        for (int w : b_side) {
            if (used_vertex[w]) continue;
            bool ok = true;
            for (int u : f.neighbors(v)) {
                int e = idx[image[u]][w];
                if (e < 0 || used_color[coloring.colors[e]]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = w;
                break;
            }
        }
        if (chosen == -1) return std::nullopt;
        image[v] = chosen;
        used_vertex[chosen] = 1;
        for (int u : f.neighbors(v)) used_color[coloring.colors[idx[image[u]][chosen]]] = 1;
    }

    RainbowCopy copy;
    copy.embedding.map = image;
    for (const auto& [u, v] : f.edges())
        copy.colors.push_back(coloring.colors[idx[image[u]][image[v]]]);
    return copy;
}

namespace {

struct HostParts {
    // classes in cyclic order; classes[i] adjacent to classes[i +- 1 mod c]
    std::vector<std::vector<int>> classes;
};

// Recover the part structure of a blowup of C_{cycle_len} from
// neighborhood-equivalence classes. param_error if the host does not have
// that shape (with all parts nonempty).
HostParts recover_cycle_blowup_parts(const Graph& host, int cycle_len) {
    const int n = host.order();
    std::map<std::vector<std::uint64_t>, std::vector<int>> by_row;
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> row(host.row(v), host.row(v) + host.row_words());
        by_row[row].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [row, verts] : by_row) classes.push_back(verts);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    const int c = static_cast<int>(classes.size());
    if (c != cycle_len)
        throw param_error("host is not a blowup of C_" + std::to_string(cycle_len) +
                          ": found " + std::to_string(c) + " neighborhood classes");

    // Class adjacency; the quotient must be the cycle (2-regular, connected)
    // and the host complete-bipartite between adjacent classes.
    std::vector<std::vector<char>> cadj(c, std::vector<char>(c, 0));
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            if (host.adjacent(classes[i][0], classes[j][0])) cadj[i][j] = cadj[j][i] = 1;
    for (int i = 0; i < c; ++i) {
        int deg = 0;
        long long expected = 0;
        for (int j = 0; j < c; ++j)
            if (cadj[i][j]) {
                ++deg;
                expected += static_cast<long long>(classes[j].size());
            }
        if (deg != 2 || expected != host.degree(classes[i][0]))
            throw param_error("host is not a blowup of C_" + std::to_string(cycle_len));
    }
    // Walk the quotient cycle starting at the class of vertex 0, toward the
    // neighbor with the smaller minimum label.
    std::vector<int> seq{0};
    std::vector<int> nb;
    for (int j = 0; j < c; ++j)
        if (cadj[0][j]) nb.push_back(j);
    seq.push_back(std::min(nb[0], nb[1]));
    while (static_cast<int>(seq.size()) < c) {
        int cur = seq.back(), prev = seq[seq.size() - 2];
        int next = -1;
        for (int j = 0; j < c; ++j)
            if (cadj[cur][j] && j != prev) next = j;
        if (next == -1 || std::find(seq.begin(), seq.end(), next) != seq.end())
            throw param_error("host quotient is not a single cycle");
        seq.push_back(next);
    }
    if (!cadj[seq.back()][seq.front()])
        throw param_error("host quotient is not a single cycle");

    HostParts parts;
    for (int i : seq) parts.classes.push_back(classes[i]);
    return parts;
}

} // namespace

std::optional<RainbowCopy> greedy_rainbow_embed_cycle_blowup(const EdgeColoring& coloring,
                                                             int cycle_len, int m) {
    if (cycle_len < 3 || cycle_len % 2 == 0)
        throw param_error("greedy_rainbow_embed_cycle_blowup: cycle length must be odd >= 3");
    if (m < 1) throw param_error("greedy_rainbow_embed_cycle_blowup: m must be >= 1");
    const Graph& host = coloring.graph;
    if (m == 1) {
        if (host.order() < 1)
            throw param_error("greedy_rainbow_embed_cycle_blowup: empty host");
        RainbowCopy copy;
        copy.embedding.map = {0};
        return copy;
    }

    HostParts parts = recover_cycle_blowup_parts(host, cycle_len);
    const int c = cycle_len;
    const BlowupSpec target_spec = balanced_blowup(cycle(c), m);
    const Graph target = blowup(target_spec);
    auto idx = edge_index_matrix(host);
    const int ncolors = std::max(coloring.color_count(), 1);

    std::vector<int> tstart(c + 1, 0);
    for (int i = 0; i < c; ++i) tstart[i + 1] = tstart[i] + target_spec.part_sizes[i];

    // Try every cyclic alignment of target parts onto host parts.
    for (int dir : {1, -1}) {
        for (int offset = 0; offset < c; ++offset) {
            auto host_class = [&](int i) -> const std::vector<int>& {
                int j = (offset + dir * i) % c;
                if (j < 0) j += c;
                return parts.classes[j];
            };
            std::vector<int> image(target.order(), -1);
            std::vector<char> used_vertex(host.order(), 0);
            std::vector<char> used_color(ncolors, 0);
            bool failed = false;
            for (int part = 0; part < c && !failed; ++part) {
                for (int tv = tstart[part]; tv < tstart[part + 1] && !failed; ++tv) {
                    int chosen = -1;
                    for (int w : host_class(part)) {
                        if (used_vertex[w]) continue;
                        bool ok = true;
                        for (int tu : target.neighbors(tv)) {
                            if (image[tu] == -1) continue;
                            int e = idx[image[tu]][w];
                            if (e < 0 || used_color[coloring.colors[e]]) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            chosen = w;
                            break;
                        }
                    }
                    if (chosen == -1) {
                        failed = true;
                        break;
                    }
                    image[tv] = chosen;
                    used_vertex[chosen] = 1;
                    for (int tu : target.neighbors(tv)) {
                        if (image[tu] == -1) continue;
                        used_color[coloring.colors[idx[image[tu]][chosen]]] = 1;
                    }
                }
            }
            if (failed) continue;
            RainbowCopy copy;
            copy.embedding.map = image;
            for (const auto& [u, v] : target.edges())
                copy.colors.push_back(coloring.colors[idx[image[u]][image[v]]]);
            return copy;
        }
    }
    return std::nullopt;
}

EdgeColoring random_proper_coloring(const Graph& g, std::uint64_t seed) {
    const int m = g.edge_count();
    auto es = g.edges();
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    // Fisher-Yates with raw engine outputs: std::shuffle's sequence is
    // implementation-defined, this one is portable.
    std::mt19937_64 rng(seed);
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }

    int max_colors = 1;
    for (int v = 0; v < g.order(); ++v) max_colors = std::max(max_colors, 2 * g.degree(v));
    const int words = (max_colors + 63) / 64;
    std::vector<std::uint64_t> used(static_cast<std::size_t>(g.order()) * words, 0);
    std::vector<int> colors(m, -1);
    for (int e : order) {
        auto [u, v] = es[e];
        int color = -1;
        for (int w = 0; w < words && color == -1; ++w) {
            std::uint64_t free_bits =
                ~(used[static_cast<std::size_t>(u) * words + w] |
                  used[static_cast<std::size_t>(v) * words + w]);
            if (free_bits) {
                int bit = std::countr_zero(free_bits);
                color = w * 64 + bit;
            }
        }
        colors[e] = color;
        used[static_cast<std::size_t>(u) * words + (color >> 6)] |= std::uint64_t{1}
                                                                    << (color & 63);
        used[static_cast<std::size_t>(v) * words + (color >> 6)] |= std::uint64_t{1}
                                                                    << (color & 63);
    }
    return EdgeColoring{g, colors};
}

} // namespace vat
