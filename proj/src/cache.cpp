#include "vat/cache.hpp"

#include <chrono>
#include <fstream>

namespace vat {

JsonlCache::JsonlCache(std::string path, bool enabled)
    : path_(std::move(path)), enabled_(enabled) {}

std::string JsonlCache::digest(const std::string& canonical_params) {
    // FNV-1a, 64 bit
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical_params) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<json> JsonlCache::lookup(const std::string& command, const json& params) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    const std::string want_digest = digest(params.dump());
    std::string line;
    std::optional<json> found;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded()) continue; // tolerate a torn trailing write
        if (rec.value("command", "") != command) continue;
        if (rec.value("digest", "") != want_digest) continue;
        if (rec.at("params") != params) continue;
        found = rec.at("result"); // last record wins
    }
    return found;
}

void JsonlCache::store(const std::string& command, const json& params, const json& result) {
    if (!enabled_) return;
    json rec;
    rec["command"] = command;
    rec["digest"] = digest(params.dump());
    rec["params"] = params;
    rec["result"] = result;
    rec["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
    std::ofstream out(path_, std::ios::app);
    if (out) out << rec.dump() << "\n";
}

} // namespace vat
