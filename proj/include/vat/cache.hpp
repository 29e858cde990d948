#pragma once

#include <optional>
#include <string>

#include "vat/json_io.hpp"

namespace vat {

// Append-only JSON-lines result cache. A record stores the command name,
// an FNV-1a digest of the canonical parameter dump, the parameters
// themselves (matched exactly, so digest collisions are harmless), the
// result, and a timestamp. Timestamps never reach stdout reports.
class JsonlCache {
public:
    JsonlCache(std::string path, bool enabled);

    std::optional<json> lookup(const std::string& command, const json& params) const;
    void store(const std::string& command, const json& params, const json& result);

    static std::string digest(const std::string& canonical_params);

private:
    std::string path_;
    bool enabled_;
};

} // namespace vat
