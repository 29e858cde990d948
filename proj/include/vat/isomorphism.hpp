#pragma once

#include <string>

#include "vat/graph.hpp"
#include "vat/limits.hpp"

namespace vat {

// Canonical labeling: the relabeling minimizing the adjacency bit string
// (upper triangle, column-major) over all permutations that respect the
// ascending-degree position classes. Two graphs are isomorphic iff their
// canonical forms are equal.
Graph canonicalize(const Graph& g, const Limits& limits = {});

// graph6 encoding of the canonical form; usable as a dictionary key.
std::string canonical_graph6(const Graph& g, const Limits& limits = {});

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits = {});

} // namespace vat
