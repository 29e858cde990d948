#pragma once

#include <functional>
#include <optional>

#include "vat/graph.hpp"
#include "vat/limits.hpp"

namespace vat {

// First (not necessarily induced) subgraph embedding of `pattern` into
// `host`, or nullopt when none exists. Exhaustive backtracking; raises
// budget_error if the node budget is hit before the search is decided.
std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern,
                                           const Limits& limits = {});

namespace detail {

// Shared backtracking engine: visits every injective edge-preserving map
// pattern -> host. The visitor returns false to stop the enumeration.
// Returns false iff the visitor stopped early.
bool for_each_embedding(const Graph& host, const Graph& pattern, const Limits& limits,
                        const std::function<bool(const Embedding&)>& visit);

} // namespace detail

} // namespace vat
