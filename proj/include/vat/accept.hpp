#pragma once

#include <string>
#include <vector>

#include "vat/config.hpp"
#include "vat/json_io.hpp"

namespace vat::accept {

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

// One verification suite. Serialized forms carry no timing, so repeated
// runs with a fixed seed are byte-identical; elapsed time is reported
// separately by the caller.
struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;
    double elapsed_s = 0;
    double budget_s = 0;

    bool passed() const;
    bool within_budget() const { return budget_s <= 0 || elapsed_s <= budget_s; }
    std::string to_text() const;
    json to_json_report() const;
};

// counting, homomorphism, turan, erdos-pentagon, gerbner-patkos,
// rainbow-threshold, embedders, evidence, transfer, determinism
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const Config& config);
std::vector<SuiteReport> run_all(const Config& config);

} // namespace vat::accept
