#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vat/enumeration.hpp"
#include "vat/graph.hpp"
#include "vat/limits.hpp"

namespace vat {

// Classifier sending each graph either to a discard bucket or to an
// integer level (levels may be negative). discard and level have disjoint
// domains covering all graphs; both are isomorphism-invariant.
struct Decomposition {
    std::string name;
    std::function<bool(const Graph&)> discard;
    std::function<int(const Graph&)> level; // defined iff !discard(g)
};

// Representatives G_n(i): one n-vertex graph per available level.
struct GeneratorFamily {
    std::string name;
    std::function<std::vector<int>(int n)> levels_for; // ascending
    std::function<Graph(int n, int level)> generate;
};

// Membership predicate for the allowed family. `unknown` marks budget
// exhaustion and is propagated, never coerced.
struct Partition {
    std::string name;
    std::function<Membership(const Graph&)> allowed;
    bool monotone_claimed = true;
};

// Isomorphism-invariant memo for expensive membership predicates, keyed
// by canonical graph6. Behaves as one logical map. `unknown` results are
// stored too: budgets are fixed per run, so retrying would only re-burn
// the budget.
class MembershipCache {
public:
    std::optional<Membership> find(const std::string& canon_key) const;
    void store(const std::string& canon_key, Membership m);
    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }

private:
    mutable std::mutex mu_;
    std::map<std::string, Membership> map_;
    mutable std::uint64_t hits_ = 0;
    mutable std::uint64_t misses_ = 0;
};

// Process-wide memo shared by the built-in rainbow partitions.
MembershipCache& global_membership_cache();

// Built-in decomposition 1: bipartite graphs leveled by p(F), everything
// else discarded; generators K_{i, n-i}.
Decomposition b1_decomposition();
GeneratorFamily b1_generators();

// Built-in decomposition 2: 3-chromatic graphs leveled by -(gamma(F)-1),
// everything else discarded; generators are balanced odd-cycle blowups,
// level -j generating C_{2j+1}<n>.
Decomposition b2_decomposition(const Limits& limits = {});
GeneratorFamily b2_generators();

// Built-in partitions. forbid(f): allowed iff f-free. rainbow(f): allowed
// iff some proper edge coloring has no rainbow f. all: always allowed.
Partition forbid_partition(const Graph& f, const Limits& limits = {});
Partition rainbow_partition(const Graph& f, const Limits& limits = {},
                            MembershipCache* cache = &global_membership_cache());
Partition all_partition();

// ---------------------------------------------------------------------
// Reports

struct CheckResult {
    std::string condition;
    int instances = 0;
    bool passed = false;
    std::optional<std::string> counterexample; // graph6
    int unknowns = 0;
};

enum class Verdict { supported, refuted, inconclusive_budget };

std::string to_string(Verdict v);

struct EvidenceReport {
    std::string partition;
    std::string decomposition;
    std::optional<int> candidate_k; // nullopt = infinity
    int window_lo = 0;
    int window_hi = 0;
    std::vector<CheckResult> checks;
    Verdict verdict = Verdict::inconclusive_budget;
};

struct LemmaPair {
    int level_low = 0, level_high = 0;
    int order_low = 0, order_high = 0;
    bool tested = false;
    bool passed = false;
    std::string sub_g6, host_g6;
};

struct LemmaReport {
    std::string generators;
    std::vector<LemmaPair> pairs;
    bool all_passed = false;
};

struct NicenessInstance {
    std::string forbidden_g6;
    int n = 0;
    bool generator_defined = false;
    std::optional<CopyCount> g_value; // nullopt: class empty
    CopyCount h_value;
    bool degenerate = false;             // empty class or h == 0
    std::optional<bool> exact_pass;      // exact mode only
    std::optional<double> ratio;         // ratio mode, when defined
    bool budget_hit = false;
};

struct NicenessReport {
    std::string decomposition;
    std::string function;
    int k = 0;
    std::string mode; // "exact" | "ratio"
    std::vector<std::string> members_g6;
    std::vector<NicenessInstance> instances;
    bool all_exact_passed = true;
};

struct TransferInstance {
    int n = 0;
    std::string generator_g6;
    Membership generator_allowed = Membership::unknown;
    CopyCount h_value;
    std::optional<CopyCount> g_value;
    bool lower_bound_passed = false;
    std::optional<double> ratio;
    bool budget_hit = false;
};

struct TransferReport {
    std::string partition;
    std::string decomposition;
    std::string function;
    std::optional<int> evidence_k;
    Verdict evidence_verdict = Verdict::inconclusive_budget;
    bool applicable = false; // false for infinite / unsupported evidence
    std::vector<TransferInstance> instances;
    bool all_passed = false;
};

// ---------------------------------------------------------------------
// Operations

// For each pair of levels i <= k and orders m <= n on the grid, verify
// that G_n(k) contains G_m(i) as a subgraph.
LemmaReport lemma_containment_check(const GeneratorFamily& gf, const std::vector<int>& levels,
                                    const std::vector<int>& orders,
                                    const Limits& limits = {});

// Bounded-window evidence that the partition's very abstract chromatic
// number equals k (finite case: generators below k allowed, some G_m(k)
// excluded, membership monotone on an enumerated sample; infinite case:
// every tested generator allowed).
EvidenceReport very_abstract_evidence(const Partition& p, const Decomposition& d,
                                      const GeneratorFamily& gf, std::optional<int> k,
                                      int window_lo, int window_hi,
                                      const Limits& limits = {});

// Smallest level k in the window with an excluded generator while all
// lower available levels stay allowed; nullopt when nothing is excluded.
std::optional<int> detect_candidate_k(const Partition& p, const GeneratorFamily& gf,
                                      int window_lo, int window_hi, const Limits& limits = {});

// For small members F of level k: compare g_B(n, F) (extremal over
// non-discarded F-free graphs) against h(G_n(k-1)).
NicenessReport niceness_check(const Decomposition& d, const GeneratorFamily& gf,
                              const TuranFunction& h, int k, int window_lo, int window_hi,
                              const std::string& mode, const Limits& limits = {},
                              int member_order_cap = 5);

// Desk check of the transfer theorem's lower-bound step: G_n(k-1) is
// allowed and g(n, (A, F)) >= h(G_n(k-1)); ratios recorded.
TransferReport transfer_check(const Partition& p, const Decomposition& d,
                              const GeneratorFamily& gf, const TuranFunction& h,
                              int window_lo, int window_hi, const Limits& limits = {},
                              const EvidenceReport* evidence = nullptr);

} // namespace vat
