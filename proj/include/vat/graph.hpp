#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vat/errors.hpp"

namespace vat {

// Finite simple graph with dense vertex labels 0..n-1.
// Adjacency is kept as bitset rows so containment and coloring searches
// stay cheap for hosts up to a few hundred vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return degree_[v]; }

    // Rejects loops and out-of-range endpoints; adding an existing edge
    // is a no-op (edge sets, not multisets).
    void add_edge(int u, int v);

    std::vector<int> neighbors(int v) const;
    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph on `keep` (labels compacted in the given order).
    Graph induced(const std::vector<int>& keep) const;
    // Copy with one edge removed.
    Graph without_edge(int u, int v) const;
    // Copy with one extra vertex labeled n, adjacent to `nbrs`.
    Graph with_vertex(const std::vector<int>& nbrs) const;

    const std::uint64_t* row(int v) const {
        return adj_.data() + static_cast<std::size_t>(v) * words_;
    }
    int row_words() const { return words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<int> degree_;
};

// Named constructors. All labelings are deterministic so witnesses and
// serialized fixtures are reproducible.
Graph empty_graph(int n);
Graph complete(int n);
Graph cycle(int len);       // len >= 3
Graph path(int n);          // n >= 1 vertices
Graph complete_bipartite(int s, int t);
Graph complete_multipartite(const std::vector<int>& parts);
Graph turan(int n, int r);  // balanced complete r-partite, larger parts first
Graph disjoint_union(const Graph& a, const Graph& b);

// CLI-facing dispatcher over the named families.
Graph construct(const std::string& family, const std::vector<int>& params);

// Blowup of `base`: vertex v becomes an independent set of part_sizes[v]
// vertices; edges become complete bipartite graphs between parts.
struct BlowupSpec {
    Graph base;
    std::vector<int> part_sizes;

    void validate() const;
    int realized_order() const;
};

// Vertices grouped by base vertex in label order.
Graph blowup(const BlowupSpec& spec);

// Balanced blowup on n vertices: parts of size t or t+1; the n mod order
// base vertices with smallest labels receive t+1.
BlowupSpec balanced_blowup(const Graph& base, int n);

// Injective map pattern vertex -> host vertex carrying every pattern edge.
struct Embedding {
    std::vector<int> map;
};

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

} // namespace vat
