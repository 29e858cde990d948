#include "vat/enumeration.hpp"

#include <algorithm>
#include <map>

#include "vat/graph6.hpp"
#include "vat/isomorphism.hpp"
#include "vat/subgraph.hpp"

namespace vat {

TuranFunction edge_count_function() {
    return TuranFunction{"edges", [](const Graph& g) { return CopyCount(g.edge_count()); }};
}

TuranFunction copy_count_function(const Graph& pattern, const Limits& limits) {
    return TuranFunction{"count:" + graph6_encode(pattern),
                         [pattern, limits](const Graph& g) {
                             return count_copies(pattern, g, limits);
                         }};
}

namespace {

void check_enum_budget(int n, const Limits& limits) {
    if (n < 0) throw param_error("enumerate_graphs: n must be nonnegative");
    if (n > limits.max_n)
        throw budget_error("enumerate_graphs: n = " + std::to_string(n) +
                           " exceeds configured cap " + std::to_string(limits.max_n));
    if (n > kEnumerationHardCap)
        throw budget_error("enumerate_graphs: n exceeds hard cap 10");
}

// One augmentation level: every way of attaching a fresh vertex to each
// parent, deduplicated by canonical form. `keep` may drop children whose
// class can never recover (monotone pruning).
std::map<std::string, Graph> augment(const std::map<std::string, Graph>& parents,
                                     const Limits& limits,
                                     const std::function<bool(const Graph&)>& keep) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : parents) {
        const int k = g.order();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<int> nbrs;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) nbrs.push_back(i);
            Graph child = g.with_vertex(nbrs);
            Graph canon = canonicalize(child, limits);
            std::string ckey = graph6_encode(canon);
            if (next.count(ckey)) continue;
            if (keep && !keep(canon)) continue;
            next.emplace(std::move(ckey), std::move(canon));
        }
    }
    return next;
}

std::map<std::string, Graph> level_zero() {
    std::map<std::string, Graph> base;
    Graph null0(0);
    base.emplace(graph6_encode(null0), null0);
    return base;
}

} // namespace

void enumerate_graphs(int n, const Limits& limits,
                      const std::function<void(const Graph&)>& yield) {
    check_enum_budget(n, limits);
    std::map<std::string, Graph> level = level_zero();
    for (int k = 0; k < n; ++k) level = augment(level, limits, nullptr);
    for (const auto& [key, g] : level) yield(g);
}

std::vector<Graph> enumerate_graphs(int n, const Limits& limits) {
    std::vector<Graph> out;
    enumerate_graphs(n, limits, [&](const Graph& g) { out.push_back(g); });
    return out;
}

ExtremalResult extremal_value(int n, const TuranFunction& h, const ClassConstraint& c,
                              const Limits& limits) {
    check_enum_budget(n, limits);

    auto forbidden_free = [&](const Graph& g) {
        for (const Graph& f : c.forbidden)
            if (contains_subgraph(g, f, limits)) return false;
        return true;
    };
    // Monotone pruning during augmentation: a child containing a forbidden
    // pattern, or falling out of a subgraph-closed allowed family, can
    // never qualify, nor can any graph generated above it.
    std::function<bool(const Graph&)> keep = [&](const Graph& g) {
        if (!forbidden_free(g)) return false;
        if (c.membership && c.membership_monotone && c.membership(g) == Membership::forbidden)
            return false;
        return true;
    };

    std::map<std::string, Graph> level = level_zero();
    for (int k = 0; k < n; ++k) level = augment(level, limits, keep);

    ExtremalResult result;
    result.n = n;
    for (const auto& [key, g] : level) {
        ++result.graphs_scanned;
        if (!forbidden_free(g)) continue; // level 0 bypasses augment()
        if (c.discard && c.discard(g)) continue;
        if (c.membership) {
            Membership m = c.membership(g);
            if (m == Membership::unknown) {
                result.budget_hit = true;
                continue;
            }
            if (m == Membership::forbidden) continue;
        }
        CopyCount value = h.evaluate(g);
        if (!result.value || value > *result.value) {
            result.value = value;
            result.witnesses.clear();
            result.witnesses.push_back(key);
        } else if (value == *result.value) {
            result.witnesses.push_back(key);
        }
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    return result;
}

} // namespace vat
