#pragma once

#include <optional>
#include <vector>

#include "vat/graph.hpp"
#include "vat/limits.hpp"

namespace vat {

// Proper 2-coloring per connected component: side[v] in {0, 1}, side 0
// being the smaller side of v's component (ties broken toward the side of
// the component's smallest vertex).
struct Bipartition {
    std::vector<int> side;
};

// nullopt iff the graph has an odd cycle.
std::optional<Bipartition> try_bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Exact chromatic number by iterative k-coloring backtracking.
// order 0 -> 0; edgeless on n >= 1 vertices -> 1.
int chromatic_number(const Graph& g, const Limits& limits = {});

// Sum over connected components of the smaller bipartition side.
// Raises non_bipartite_error (with an odd-cycle witness) otherwise.
int p_value(const Graph& f);

// Edge-preserving (not necessarily injective) vertex map f -> b, or
// nullopt when none exists.
std::optional<std::vector<int>> hom_exists(const Graph& f, const Graph& b,
                                           const Limits& limits = {});

// Largest k >= 2 such that f maps homomorphically into C_{2k-1} (C_3 read
// as K_3). Defined for 3-chromatic f only; bounded above via odd girth.
int gamma(const Graph& f, const Limits& limits = {});

// Length of the shortest odd cycle; nullopt for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);

} // namespace vat
