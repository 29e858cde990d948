#include "vat/graph.hpp"

#include <algorithm>
#include <numeric>

namespace vat {

Graph::Graph(int order) {
    if (order < 0) throw param_error("graph order must be nonnegative");
    n_ = order;
    words_ = order == 0 ? 1 : (order + 63) / 64;
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    degree_.assign(n_, 0);
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw param_error("edge endpoint out of range");
    if (u == v) throw param_error("loops are not allowed");
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++degree_[u];
    ++degree_[v];
    ++m_;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g(n_);
    for (const auto& [a, b] : edges())
        if (!((a == u && b == v) || (a == v && b == u))) g.add_edge(a, b);
    return g;
}

Graph Graph::with_vertex(const std::vector<int>& nbrs) const {
    Graph g(n_ + 1);
    for (const auto& [a, b] : edges()) g.add_edge(a, b);
    for (int u : nbrs) g.add_edge(u, n_);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int len) {
    if (len < 3) throw param_error("cycle length must be at least 3");
    Graph g(len);
    for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
    return g;
}

Graph path(int n) {
    if (n < 1) throw param_error("path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_bipartite(int s, int t) {
    if (s < 0 || t < 0) throw param_error("part sizes must be nonnegative");
    Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 0) throw param_error("part sizes must be nonnegative");
        n += p;
    }
    Graph g(n);
    std::vector<int> part_of;
    part_of.reserve(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph turan(int n, int r) {
    if (n < 0) throw param_error("turan: n must be nonnegative");
    if (r < 1) throw param_error("turan: r must be at least 1");
    int q = n / r;
    int rem = n % r;
    std::vector<int> parts;
    parts.reserve(r);
    for (int i = 0; i < r; ++i) parts.push_back(i < rem ? q + 1 : q);
    return complete_multipartite(parts);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph construct(const std::string& family, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw param_error("family '" + family + "' takes " + std::to_string(k) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "complete") {
        want(1);
        return complete(params[0]);
    }
    if (family == "cycle") {
        want(1);
        return cycle(params[0]);
    }
    if (family == "path") {
        want(1);
        return path(params[0]);
    }
    if (family == "complete_bipartite") {
        want(2);
        return complete_bipartite(params[0], params[1]);
    }
    if (family == "complete_multipartite") {
        if (params.empty()) throw param_error("complete_multipartite needs part sizes");
        return complete_multipartite(params);
    }
    if (family == "turan") {
        want(2);
        return turan(params[0], params[1]);
    }
    throw param_error("unknown graph family '" + family + "'");
}

void BlowupSpec::validate() const {
    if (static_cast<int>(part_sizes.size()) != base.order())
        throw param_error("blowup: part_sizes length must equal base order");
    for (int s : part_sizes)
        if (s < 0) throw param_error("blowup: part sizes must be nonnegative");
}

int BlowupSpec::realized_order() const {
    validate();
    return std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
}

Graph blowup(const BlowupSpec& spec) {
    spec.validate();
    int n = spec.realized_order();
    Graph g(n);
    std::vector<int> start(spec.part_sizes.size() + 1, 0);
    for (std::size_t i = 0; i < spec.part_sizes.size(); ++i)
        start[i + 1] = start[i] + spec.part_sizes[i];
    for (const auto& [u, v] : spec.base.edges())
        for (int a = start[u]; a < start[u + 1]; ++a)
            for (int b = start[v]; b < start[v + 1]; ++b) g.add_edge(a, b);
    return g;
}

BlowupSpec balanced_blowup(const Graph& base, int n) {
    if (n < 0) throw param_error("balanced_blowup: n must be nonnegative");
    if (base.order() == 0) {
        if (n > 0) throw param_error("balanced_blowup: base of order 0 cannot realize n > 0");
        return BlowupSpec{base, {}};
    }
    int t = n / base.order();
    int rem = n % base.order();
    std::vector<int> sizes(base.order(), t);
    for (int i = 0; i < rem; ++i) ++sizes[i];
    return BlowupSpec{base, std::move(sizes)};
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.order()) return false;
    std::vector<char> used(host.order(), 0);
    for (int w : e.map) {
        if (w < 0 || w >= host.order() || used[w]) return false;
        used[w] = 1;
    }
    for (const auto& [u, v] : pattern.edges())
        if (!host.adjacent(e.map[u], e.map[v])) return false;
    return true;
}

} // namespace vat
