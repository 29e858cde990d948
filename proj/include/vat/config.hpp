#pragma once

#include <cstdint>
#include <string>

#include "vat/limits.hpp"

namespace vat {

// Runtime configuration. Precedence: defaults < config file < flags.
// The file format is plain `key = value` lines; '#' starts a comment.
struct Config {
    int max_n = 8;
    int edge_budget = 24;
    std::int64_t node_budget = 100'000'000;
    int time_budget_s = 600;
    std::uint64_t seed = 0;
    std::string cache_path = "./cache.jsonl";
    bool use_cache = true;

    void validate() const;
    Limits limits() const;
};

// Reads `key = value` pairs into an existing config; unknown keys are
// rejected. Missing file is an error.
void load_config_file(Config& config, const std::string& path);

// Applies VAT_CONFIG if set; silently keeps defaults when unset.
void load_config_env(Config& config);

} // namespace vat
