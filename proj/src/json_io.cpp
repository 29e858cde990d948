#include "vat/json_io.hpp"

#include "vat/graph6.hpp"

namespace vat {

json to_json(const CopyCount& c) { return c.str(); }

std::string membership_to_string(Membership m) {
    switch (m) {
        case Membership::allowed: return "allowed";
        case Membership::forbidden: return "forbidden";
        case Membership::unknown: return "unknown";
    }
    return "?";
}

json to_json(const ExtremalResult& r) {
    json j;
    j["n"] = r.n;
    j["value"] = r.value ? to_json(*r.value) : json(nullptr);
    j["witnesses"] = r.witnesses;
    j["graphs_scanned"] = r.graphs_scanned;
    j["budget_hit"] = r.budget_hit;
    return j;
}

json to_json(const EdgeColoring& c) {
    json j;
    j["graph"] = graph6_encode(c.graph);
    j["colors"] = c.colors;
    return j;
}

EdgeColoring edge_coloring_from_json(const json& j) {
    EdgeColoring c;
    c.graph = graph6_decode(j.at("graph").get<std::string>());
    c.colors = j.at("colors").get<std::vector<int>>();
    return c;
}

json to_json(const RainbowCopy& copy, const Graph& pattern) {
    json j;
    j["pattern"] = graph6_encode(pattern);
    j["map"] = copy.embedding.map;
    j["colors"] = copy.colors;
    return j;
}

json to_json(const CheckResult& c) {
    json j;
    j["condition"] = c.condition;
    j["instances"] = c.instances;
    j["passed"] = c.passed;
    j["counterexample"] = c.counterexample ? json(*c.counterexample) : json(nullptr);
    j["unknowns"] = c.unknowns;
    return j;
}

json to_json(const EvidenceReport& r) {
    json j;
    j["partition"] = r.partition;
    j["decomposition"] = r.decomposition;
    j["candidate_k"] = r.candidate_k ? json(*r.candidate_k) : json("infinity");
    j["window"] = {r.window_lo, r.window_hi};
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    j["verdict"] = to_string(r.verdict);
    return j;
}

json to_json(const LemmaReport& r) {
    json j;
    j["generators"] = r.generators;
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        json pj;
        pj["levels"] = {p.level_low, p.level_high};
        pj["orders"] = {p.order_low, p.order_high};
        pj["tested"] = p.tested;
        pj["passed"] = p.passed;
        if (p.tested) {
            pj["sub"] = p.sub_g6;
            pj["host"] = p.host_g6;
        }
        pairs.push_back(pj);
    }
    j["pairs"] = pairs;
    j["all_passed"] = r.all_passed;
    return j;
}

json to_json(const NicenessReport& r) {
    json j;
    j["decomposition"] = r.decomposition;
    j["function"] = r.function;
    j["k"] = r.k;
    j["mode"] = r.mode;
    j["members"] = r.members_g6;
    json instances = json::array();
    for (const auto& i : r.instances) {
        json ij;
        ij["forbidden"] = i.forbidden_g6;
        ij["n"] = i.n;
        ij["generator_defined"] = i.generator_defined;
        if (i.generator_defined) {
            ij["g_value"] = i.g_value ? to_json(*i.g_value) : json(nullptr);
            ij["h_value"] = to_json(i.h_value);
            ij["degenerate"] = i.degenerate;
            if (i.exact_pass) ij["exact_pass"] = *i.exact_pass;
            if (i.ratio) ij["ratio"] = *i.ratio;
            ij["budget_hit"] = i.budget_hit;
        }
        instances.push_back(ij);
    }
    j["instances"] = instances;
    j["all_exact_passed"] = r.all_exact_passed;
    return j;
}

json to_json(const TransferReport& r) {
    json j;
    j["partition"] = r.partition;
    j["decomposition"] = r.decomposition;
    j["function"] = r.function;
    j["evidence_k"] = r.evidence_k ? json(*r.evidence_k) : json("infinity");
    j["evidence_verdict"] = to_string(r.evidence_verdict);
    j["applicable"] = r.applicable;
    json instances = json::array();
    for (const auto& i : r.instances) {
        json ij;
        ij["n"] = i.n;
        ij["generator"] = i.generator_g6;
        ij["generator_allowed"] = membership_to_string(i.generator_allowed);
        ij["h_value"] = to_json(i.h_value);
        ij["g_value"] = i.g_value ? to_json(*i.g_value) : json(nullptr);
        ij["lower_bound_passed"] = i.lower_bound_passed;
        if (i.ratio) ij["ratio"] = *i.ratio;
        ij["budget_hit"] = i.budget_hit;
        instances.push_back(ij);
    }
    j["instances"] = instances;
    j["all_passed"] = r.all_passed;
    return j;
}

} // namespace vat
