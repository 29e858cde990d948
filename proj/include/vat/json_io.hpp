#pragma once

#include <json.hpp>

#include "vat/enumeration.hpp"
#include "vat/framework.hpp"
#include "vat/rainbow.hpp"

namespace vat {

using json = nlohmann::json;

// CopyCount values serialize as decimal strings: they routinely exceed
// anything a JSON number can carry faithfully.
json to_json(const CopyCount& c);
json to_json(const ExtremalResult& r);
json to_json(const EdgeColoring& c); // graph6 plus colors in lex edge order
json to_json(const RainbowCopy& copy, const Graph& pattern);
json to_json(const CheckResult& c);
json to_json(const EvidenceReport& r);
json to_json(const LemmaReport& r);
json to_json(const NicenessReport& r);
json to_json(const TransferReport& r);

EdgeColoring edge_coloring_from_json(const json& j);

std::string membership_to_string(Membership m);

} // namespace vat
