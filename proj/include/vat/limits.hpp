#pragma once

#include <cstdint>

namespace vat {

// Search budgets shared by the exact solvers. All solvers are exhaustive;
// when a budget is hit they raise budget_error instead of guessing.
struct Limits {
    std::int64_t node_budget = 100'000'000; // backtracking nodes per call
    int edge_budget = 24;                   // coloring-search edge cap
    int max_n = 8;                          // enumeration order cap (hard cap 10)
    int chromatic_max_order = 10;           // order cap for chromatic_number
};

// Absolute ceiling for isomorph-free enumeration regardless of config.
inline constexpr int kEnumerationHardCap = 10;

} // namespace vat
