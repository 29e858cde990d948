#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vat/graph.hpp"
#include "vat/limits.hpp"

namespace vat {

// Proper edge coloring: colors indexed by lexicographic edge order, dense
// ids 0..c-1, edges sharing a vertex colored differently.
struct EdgeColoring {
    Graph graph;
    std::vector<int> colors; // by edge index

    int color_count() const;
    bool is_proper() const;
};

// A copy of some pattern f whose image edges have pairwise distinct
// colors. `colors` follows f's lexicographic edge order.
struct RainbowCopy {
    Embedding embedding;
    std::vector<int> colors;
};

bool verify_rainbow_copy(const EdgeColoring& coloring, const Graph& f,
                         const RainbowCopy& copy);

// Every proper edge coloring exactly once up to color renaming, realized
// in restricted-growth order: the first edge gets color 0, each later edge
// an existing compatible color or the next fresh one. The visitor returns
// false to stop. Raises budget_error above the configured edge budget.
void enumerate_proper_colorings(const Graph& g, const Limits& limits,
                                const std::function<bool(const EdgeColoring&)>& visit);
std::vector<EdgeColoring> enumerate_proper_colorings(const Graph& g,
                                                     const Limits& limits = {});

// Rainbow copy of f under the given coloring, or nullopt.
std::optional<RainbowCopy> find_rainbow_copy(const EdgeColoring& coloring, const Graph& f,
                                             const Limits& limits = {});

// A proper edge coloring of g with no rainbow copy of f, if one exists.
// nullopt means every proper coloring of g contains a rainbow f. The
// search prunes a partial coloring as soon as a fully colored copy of f
// turns rainbow.
std::optional<EdgeColoring> admits_coloring_without_rainbow(const Graph& g, const Graph& f,
                                                            const Limits& limits = {});

// Greedy rainbow embedding of a bipartite f into a properly edge-colored
// complete bipartite host K_{p,q} with p = p_value(f): the small color
// class of f goes onto the p-side, the remaining vertices are placed one
// at a time on the q-side avoiding vertices whose connecting edges repeat
// a used color. Succeeds whenever q > |E(f)| * p; below that threshold it
// may legitimately return nullopt.
std::optional<RainbowCopy> greedy_rainbow_embed_bipartite(const EdgeColoring& coloring,
                                                          const Graph& f);

// Greedy part-respecting rainbow embedding of the balanced blowup
// C_{cycle_len}<m> into a properly edge-colored blowup of C_{cycle_len}.
// Succeeds whenever every host part has at least m^3 vertices; below the
// threshold it may return nullopt. The host's part structure is recovered
// from neighborhood classes; a non-blowup host is a parameter error.
std::optional<RainbowCopy> greedy_rainbow_embed_cycle_blowup(const EdgeColoring& coloring,
                                                             int cycle_len, int m);

// Deterministic in (g, seed): greedy assignment over a seed-shuffled edge
// order, each edge taking the smallest color unused at both endpoints.
EdgeColoring random_proper_coloring(const Graph& g, std::uint64_t seed);

} // namespace vat
