#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vat/counting.hpp"
#include "vat/graph.hpp"
#include "vat/limits.hpp"

namespace vat {

// Graph parameter to maximize. Built-ins below; custom evaluators are
// plain std::functions.
struct TuranFunction {
    std::string name;
    std::function<CopyCount(const Graph&)> evaluate;
};

TuranFunction edge_count_function();
TuranFunction copy_count_function(const Graph& pattern, const Limits& limits = {});

// Three-valued membership: `unknown` is a budget artifact, never a guess.
enum class Membership { allowed, forbidden, unknown };

// A graph qualifies iff it avoids every forbidden pattern, satisfies the
// membership predicate, and is not discarded.
struct ClassConstraint {
    std::vector<Graph> forbidden;
    std::function<Membership(const Graph&)> membership; // may be empty
    // When set, the allowed family is subgraph-closed and the enumerator
    // may prune non-members during augmentation.
    bool membership_monotone = false;
    std::function<bool(const Graph&)> discard; // may be empty
};

struct ExtremalResult {
    int n = 0;
    std::optional<CopyCount> value;     // nullopt: no graph qualifies
    std::vector<std::string> witnesses; // canonical graph6, sorted
    std::uint64_t graphs_scanned = 0;
    bool budget_hit = false; // value is only a lower bound when set
};

// Exactly one representative per isomorphism class of simple graphs on n
// vertices, in canonical-graph6 order. Raises budget_error when n exceeds
// the configured cap (hard cap 10).
void enumerate_graphs(int n, const Limits& limits,
                      const std::function<void(const Graph&)>& yield);
std::vector<Graph> enumerate_graphs(int n, const Limits& limits = {});

// Maximum of h over qualifying graphs of order n with every maximizing
// witness (up to isomorphism).
ExtremalResult extremal_value(int n, const TuranFunction& h, const ClassConstraint& c,
                              const Limits& limits = {});

} // namespace vat
