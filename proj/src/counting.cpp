#include "vat/counting.hpp"

#include <functional>

#include "vat/subgraph.hpp"

namespace vat {

CopyCount binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    CopyCount r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

CopyCount injective_hom_count(const Graph& h, const Graph& g, const Limits& limits) {
    if (h.order() < 1) throw param_error("injective_hom_count: pattern must be nonempty");
    long long count = 0;
    detail::for_each_embedding(g, h, limits, [&](const Embedding&) {
        ++count;
        return true;
    });
    return count;
}

CopyCount automorphism_count(const Graph& h, const Limits& limits) {
    if (h.order() < 1) throw param_error("automorphism_count: graph must be nonempty");
    const int n = h.order();
    std::int64_t nodes = 0;
    long long count = 0;
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || h.degree(w) != h.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (h.adjacent(u, v) != h.adjacent(image[u], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (++nodes > limits.node_budget)
                throw budget_error("automorphism_count: node budget exceeded");
            image[v] = w;
            used[w] = 1;
            rec(v + 1);
            used[w] = 0;
            image[v] = -1;
        }
    };
    rec(0);
    return count;
}

CopyCount count_copies(const Graph& h, const Graph& g, const Limits& limits) {
    if (h.order() < 1) throw param_error("count_copies: pattern must be nonempty");
    CopyCount injs = injective_hom_count(h, g, limits);
    CopyCount aut = automorphism_count(h, limits);
    if (injs % aut != 0)
        throw error("count_copies: injective hom count not divisible by |Aut|");
    return injs / aut;
}

CopyCount closed_form_kab(int a, int b, int s, int t) {
    if (a < 1 || b < 1) throw param_error("closed_form_kab: a, b must be >= 1");
    if (s < 0 || t < 0) throw param_error("closed_form_kab: s, t must be >= 0");
    if (a == b) return binomial(s, a) * binomial(t, a);
    return binomial(s, a) * binomial(t, b) + binomial(s, b) * binomial(t, a);
}

CopyCount closed_form_odd_cycle_blowup(int k, const std::vector<long long>& part_sizes) {
    if (k < 1) throw param_error("closed_form_odd_cycle_blowup: k must be >= 1");
    if (static_cast<int>(part_sizes.size()) != 2 * k + 1)
        throw param_error("closed_form_odd_cycle_blowup: expected " +
                          std::to_string(2 * k + 1) + " part sizes");
    CopyCount prod = 1;
    for (long long s : part_sizes) {
        if (s < 0) throw param_error("closed_form_odd_cycle_blowup: negative part size");
        prod *= s;
    }
    return prod;
}

} // namespace vat
