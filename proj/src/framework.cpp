#include "vat/framework.hpp"

#include <algorithm>

#include "vat/graph6.hpp"
#include "vat/isomorphism.hpp"
#include "vat/parameters.hpp"
#include "vat/rainbow.hpp"
#include "vat/subgraph.hpp"

namespace vat {

std::optional<Membership> MembershipCache::find(const std::string& canon_key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(canon_key);
    if (it == map_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void MembershipCache::store(const std::string& canon_key, Membership m) {
    std::lock_guard<std::mutex> lock(mu_);
    map_[canon_key] = m;
}

MembershipCache& global_membership_cache() {
    static MembershipCache cache;
    return cache;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::supported: return "supported";
        case Verdict::refuted: return "refuted";
        case Verdict::inconclusive_budget: return "inconclusive-budget";
    }
    return "?";
}

Decomposition b1_decomposition() {
    Decomposition d;
    d.name = "b1";
    d.discard = [](const Graph& g) { return !is_bipartite(g); };
    d.level = [](const Graph& g) { return p_value(g); };
    return d;
}

GeneratorFamily b1_generators() {
    GeneratorFamily gf;
    gf.name = "b1";
    gf.levels_for = [](int n) {
        std::vector<int> levels;
        for (int i = 0; i <= n / 2; ++i) levels.push_back(i);
        return levels;
    };
    gf.generate = [](int n, int level) {
        if (level < 0 || level > n - level)
            throw param_error("b1 generator: level out of range for order " +
                              std::to_string(n));
        return complete_bipartite(level, n - level);
    };
    return gf;
}

Decomposition b2_decomposition(const Limits& limits) {
    Decomposition d;
    d.name = "b2";
    d.discard = [limits](const Graph& g) { return chromatic_number(g, limits) != 3; };
    // gamma = 2 sits at level -1, larger gamma at more negative levels, so
    // Lemma-style comparisons "i < k" read the same as in the level order.
    d.level = [limits](const Graph& g) { return -(gamma(g, limits) - 1); };
    return d;
}

GeneratorFamily b2_generators() {
    GeneratorFamily gf;
    gf.name = "b2";
    gf.levels_for = [](int n) {
        std::vector<int> levels;
        for (int j = (n - 1) / 2; j >= 1; --j)
            if (2 * j + 1 <= n) levels.push_back(-j);
        return levels;
    };
    gf.generate = [](int n, int level) {
        int j = -level;
        if (j < 1 || 2 * j + 1 > n)
            throw param_error("b2 generator: level out of range for order " +
                              std::to_string(n));
        return blowup(balanced_blowup(cycle(2 * j + 1), n));
    };
    return gf;
}

Partition forbid_partition(const Graph& f, const Limits& limits) {
    Partition p;
    p.name = "forbid:" + graph6_encode(f);
    p.monotone_claimed = true;
    p.allowed = [f, limits](const Graph& g) {
        try {
            return contains_subgraph(g, f, limits) ? Membership::forbidden
                                                   : Membership::allowed;
        } catch (const budget_error&) {
            return Membership::unknown;
        }
    };
    return p;
}

Partition all_partition() {
    Partition p;
    p.name = "all";
    p.monotone_claimed = true;
    p.allowed = [](const Graph&) { return Membership::allowed; };
    return p;
}

namespace {

// Rainbow membership with a monotonicity shortcut: the allowed family is
// subgraph-closed (restricting a witness coloring of g to a subgraph stays
// proper and rainbow-free), so a forbidden spanning subgraph settles g
// without a coloring search.
Membership rainbow_member(const Graph& g, const Graph& f, const Limits& limits,
                          MembershipCache* cache) {
    std::string key = canonical_graph6(g, limits);
    if (cache) {
        if (auto hit = cache->find(key)) return *hit;
    }
    Membership result = Membership::unknown;
    for (const auto& [u, v] : g.edges()) {
        if (rainbow_member(g.without_edge(u, v), f, limits, cache) ==
            Membership::forbidden) {
            result = Membership::forbidden;
            break;
        }
    }
    if (result == Membership::unknown) {
        try {
            result = admits_coloring_without_rainbow(g, f, limits)
                         ? Membership::allowed
                         : Membership::forbidden;
        } catch (const budget_error&) {
            result = Membership::unknown;
        }
    }
    if (cache) cache->store(key, result);
    return result;
}

} // namespace

Partition rainbow_partition(const Graph& f, const Limits& limits, MembershipCache* cache) {
    Partition p;
    p.name = "rainbow:" + graph6_encode(f);
    p.monotone_claimed = true;
    p.allowed = [f, limits, cache](const Graph& g) {
        return rainbow_member(g, f, limits, cache);
    };
    return p;
}

LemmaReport lemma_containment_check(const GeneratorFamily& gf, const std::vector<int>& levels,
                                    const std::vector<int>& orders, const Limits& limits) {
    LemmaReport report;
    report.generators = gf.name;
    report.all_passed = true;
    for (int i : levels)
        for (int k : levels) {
            if (i > k) continue;
            for (int m : orders)
                for (int n : orders) {
                    if (m > n) continue;
                    LemmaPair pair;
                    pair.level_low = i;
                    pair.level_high = k;
                    pair.order_low = m;
                    pair.order_high = n;
                    auto lv_m = gf.levels_for(m);
                    auto lv_n = gf.levels_for(n);
                    bool defined = std::count(lv_m.begin(), lv_m.end(), i) &&
                                   std::count(lv_n.begin(), lv_n.end(), k);
                    if (!defined) {
                        pair.tested = false;
                        report.pairs.push_back(pair);
                        continue;
                    }
                    Graph sub = gf.generate(m, i);
                    Graph host = gf.generate(n, k);
                    pair.sub_g6 = graph6_encode(sub);
                    pair.host_g6 = graph6_encode(host);
                    try {
                        pair.tested = true;
                        pair.passed = contains_subgraph(host, sub, limits).has_value();
                    } catch (const budget_error&) {
                        pair.tested = false;
                    }
                    if (pair.tested && !pair.passed) report.all_passed = false;
                    report.pairs.push_back(pair);
                }
        }
    return report;
}

namespace {

CheckResult monotonicity_sample_check(const Partition& p, const Limits& limits,
                                      int order_cap) {
    CheckResult check;
    check.condition = "monotonicity-sample";
    Limits enum_limits = limits;
    enum_limits.max_n = std::max(enum_limits.max_n, order_cap);
    for (int n = 1; n <= order_cap; ++n) {
        for (const Graph& g : enumerate_graphs(n, enum_limits)) {
            Membership mg = p.allowed(g);
            if (mg == Membership::unknown) {
                ++check.unknowns;
                continue;
            }
            if (mg != Membership::allowed) continue;
            ++check.instances;
            auto expect_allowed = [&](const Graph& sub) {
                Membership ms = p.allowed(sub);
                if (ms == Membership::unknown) ++check.unknowns;
                if (ms == Membership::forbidden && !check.counterexample)
                    check.counterexample = graph6_encode(g);
            };
            for (const auto& [u, v] : g.edges()) expect_allowed(g.without_edge(u, v));
            for (int v = 0; v < g.order(); ++v) {
                std::vector<int> keep;
                for (int u = 0; u < g.order(); ++u)
                    if (u != v) keep.push_back(u);
                expect_allowed(g.induced(keep));
            }
        }
    }
    check.passed = !check.counterexample.has_value();
    return check;
}

} // namespace

EvidenceReport very_abstract_evidence(const Partition& p, const Decomposition& d,
                                      const GeneratorFamily& gf, std::optional<int> k,
                                      int window_lo, int window_hi, const Limits& limits) {
    if (window_lo > window_hi || window_lo < 0)
        throw param_error("very_abstract_evidence: bad window");
    EvidenceReport report;
    report.partition = p.name;
    report.decomposition = d.name;
    report.candidate_k = k;
    report.window_lo = window_lo;
    report.window_hi = window_hi;

    if (!k.has_value()) {
        CheckResult check;
        check.condition = "all-generators-allowed";
        for (int n = window_lo; n <= window_hi; ++n)
            for (int i : gf.levels_for(n)) {
                Graph g = gf.generate(n, i);
                Membership m = p.allowed(g);
                ++check.instances;
                if (m == Membership::unknown) ++check.unknowns;
                if (m == Membership::forbidden && !check.counterexample)
                    check.counterexample = graph6_encode(g);
            }
        check.passed = !check.counterexample.has_value();
        report.checks.push_back(check);
        if (check.counterexample)
            report.verdict = Verdict::refuted;
        else if (check.passed && check.instances >= 1 && check.unknowns == 0)
            report.verdict = Verdict::supported;
        else
            report.verdict = Verdict::inconclusive_budget;
        return report;
    }

    // (a) generators strictly below k are allowed
    CheckResult gen;
    gen.condition = "generators-below-k-allowed";
    for (int n = window_lo; n <= window_hi; ++n)
        for (int i : gf.levels_for(n)) {
            if (i >= *k) continue;
            Graph g = gf.generate(n, i);
            Membership m = p.allowed(g);
            ++gen.instances;
            if (m == Membership::unknown) ++gen.unknowns;
            if (m == Membership::forbidden && !gen.counterexample)
                gen.counterexample = graph6_encode(g);
        }
    gen.passed = !gen.counterexample.has_value();
    report.checks.push_back(gen);

    // (b) some G_m(k) in the window is excluded
    CheckResult excl;
    excl.condition = "exclusion-at-k";
    for (int m = window_lo; m <= window_hi; ++m) {
        auto levels = gf.levels_for(m);
        if (!std::count(levels.begin(), levels.end(), *k)) continue;
        Graph g = gf.generate(m, *k);
        Membership memb = p.allowed(g);
        ++excl.instances;
        if (memb == Membership::unknown) ++excl.unknowns;
        if (memb == Membership::forbidden) {
            excl.passed = true;
            if (!excl.counterexample) excl.counterexample = graph6_encode(g);
        }
    }
    report.checks.push_back(excl);

    // (c) monotone membership justifies "no allowed G contains G_m(k)"
    CheckResult mono = monotonicity_sample_check(p, limits, 5);
    report.checks.push_back(mono);

    bool exclusion_decided_negative =
        !excl.passed && excl.instances >= 1 && excl.unknowns == 0;
    if (gen.counterexample || mono.counterexample || exclusion_decided_negative) {
        report.verdict = Verdict::refuted;
    } else if (gen.passed && excl.passed && mono.passed && gen.instances >= 1 &&
               excl.instances >= 1 && mono.instances >= 1 && gen.unknowns == 0 &&
               mono.unknowns == 0) {
        report.verdict = Verdict::supported;
    } else {
        report.verdict = Verdict::inconclusive_budget;
    }
    return report;
}

std::optional<int> detect_candidate_k(const Partition& p, const GeneratorFamily& gf,
                                      int window_lo, int window_hi, const Limits& limits) {
    (void)limits;
    std::vector<int> all_levels;
    for (int n = window_lo; n <= window_hi; ++n)
        for (int i : gf.levels_for(n)) all_levels.push_back(i);
    std::sort(all_levels.begin(), all_levels.end());
    all_levels.erase(std::unique(all_levels.begin(), all_levels.end()), all_levels.end());
    for (int level : all_levels) {
        for (int m = window_lo; m <= window_hi; ++m) {
            auto levels = gf.levels_for(m);
            if (!std::count(levels.begin(), levels.end(), level)) continue;
            if (p.allowed(gf.generate(m, level)) == Membership::forbidden) return level;
        }
    }
    return std::nullopt;
}

NicenessReport niceness_check(const Decomposition& d, const GeneratorFamily& gf,
                              const TuranFunction& h, int k, int window_lo, int window_hi,
                              const std::string& mode, const Limits& limits,
                              int member_order_cap) {
    if (mode != "exact" && mode != "ratio")
        throw param_error("niceness_check: mode must be 'exact' or 'ratio'");
    if (window_lo > window_hi) throw param_error("niceness_check: bad window");
    NicenessReport report;
    report.decomposition = d.name;
    report.function = h.name;
    report.k = k;
    report.mode = mode;

    Limits enum_limits = limits;
    enum_limits.max_n = std::max(enum_limits.max_n, member_order_cap);
    std::vector<Graph> members;
    for (int n = 1; n <= member_order_cap; ++n)
        for (const Graph& g : enumerate_graphs(n, enum_limits))
            if (!d.discard(g) && d.level(g) == k) {
                members.push_back(g);
                report.members_g6.push_back(graph6_encode(g));
            }

    for (std::size_t mi = 0; mi < members.size(); ++mi) {
        for (int n = window_lo; n <= window_hi; ++n) {
            NicenessInstance inst;
            inst.forbidden_g6 = report.members_g6[mi];
            inst.n = n;
            auto levels = gf.levels_for(n);
            inst.generator_defined = std::count(levels.begin(), levels.end(), k - 1) > 0;
            if (!inst.generator_defined) {
                report.instances.push_back(inst);
                continue;
            }
            Graph gen = gf.generate(n, k - 1);
            inst.h_value = h.evaluate(gen);
            ClassConstraint constraint;
            constraint.forbidden = {members[mi]};
            constraint.discard = d.discard;
            ExtremalResult res = extremal_value(n, h, constraint, limits);
            inst.budget_hit = res.budget_hit;
            inst.g_value = res.value;
            inst.degenerate = !inst.g_value.has_value() || inst.h_value == 0;
            if (mode == "exact") {
                if (inst.g_value.has_value()) {
                    inst.exact_pass = (*inst.g_value == inst.h_value);
                    if (!*inst.exact_pass) report.all_exact_passed = false;
                }
            } else if (inst.g_value.has_value() && inst.h_value > 0) {
                inst.ratio = static_cast<double>(*inst.g_value) /
                             static_cast<double>(inst.h_value);
            }
            report.instances.push_back(inst);
        }
    }
    return report;
}

TransferReport transfer_check(const Partition& p, const Decomposition& d,
                              const GeneratorFamily& gf, const TuranFunction& h,
                              int window_lo, int window_hi, const Limits& limits,
                              const EvidenceReport* evidence) {
    TransferReport report;
    report.partition = p.name;
    report.decomposition = d.name;
    report.function = h.name;

    EvidenceReport ev;
    if (evidence) {
        ev = *evidence;
    } else {
        auto k = detect_candidate_k(p, gf, window_lo, window_hi, limits);
        ev = very_abstract_evidence(p, d, gf, k, window_lo, window_hi, limits);
    }
    report.evidence_k = ev.candidate_k;
    report.evidence_verdict = ev.verdict;
    report.applicable = ev.candidate_k.has_value() && ev.verdict == Verdict::supported;
    if (!report.applicable) {
        report.all_passed = true; // nothing asserted, mirroring the infinite case
        return report;
    }
    const int k = *ev.candidate_k;

    for (int n = window_lo; n <= window_hi; ++n) {
        auto levels = gf.levels_for(n);
        if (!std::count(levels.begin(), levels.end(), k - 1)) continue;
        TransferInstance inst;
        inst.n = n;
        Graph gen = gf.generate(n, k - 1);
        inst.generator_g6 = graph6_encode(gen);
        inst.generator_allowed = p.allowed(gen);
        inst.h_value = h.evaluate(gen);

        ClassConstraint constraint;
        constraint.membership = p.allowed;
        constraint.membership_monotone = p.monotone_claimed;
        ExtremalResult res = extremal_value(n, h, constraint, limits);
        inst.budget_hit = res.budget_hit;
        inst.g_value = res.value;
        inst.lower_bound_passed = inst.generator_allowed == Membership::allowed &&
                                  inst.g_value.has_value() &&
                                  *inst.g_value >= inst.h_value;
        if (inst.g_value.has_value() && inst.h_value > 0)
            inst.ratio =
                static_cast<double>(*inst.g_value) / static_cast<double>(inst.h_value);
        report.instances.push_back(inst);
    }
    report.all_passed = !report.instances.empty();
    for (const auto& inst : report.instances)
        if (!inst.lower_bound_passed) report.all_passed = false;
    return report;
}

} // namespace vat
