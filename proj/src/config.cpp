#include "vat/config.hpp"

#include <cstdlib>
#include <fstream>

#include "vat/errors.hpp"

namespace vat {

void Config::validate() const {
    if (max_n <= 0 || edge_budget <= 0 || node_budget <= 0 || time_budget_s <= 0)
        throw param_error("config: caps must be positive");
}

Limits Config::limits() const {
    Limits l;
    l.max_n = max_n;
    l.edge_budget = edge_budget;
    l.node_budget = node_budget;
    return l;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void load_config_file(Config& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw param_error("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw param_error("config: line " + std::to_string(lineno) +
                              " is not 'key = value'");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        try {
            if (key == "max_n")
                config.max_n = std::stoi(value);
            else if (key == "edge_budget")
                config.edge_budget = std::stoi(value);
            else if (key == "node_budget")
                config.node_budget = std::stoll(value);
            else if (key == "time_budget_s")
                config.time_budget_s = std::stoi(value);
            else if (key == "seed")
                config.seed = std::stoull(value);
            else if (key == "cache_path")
                config.cache_path = value;
            else
                throw param_error("config: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw param_error("config: bad value for '" + key + "' at line " +
                              std::to_string(lineno));
        } catch (const std::out_of_range&) {
            throw param_error("config: value out of range for '" + key + "' at line " +
                              std::to_string(lineno));
        }
    }
    config.validate();
}

void load_config_env(Config& config) {
    if (const char* path = std::getenv("VAT_CONFIG")) load_config_file(config, path);
}

} // namespace vat
