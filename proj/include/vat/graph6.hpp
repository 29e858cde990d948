#pragma once

#include <string>
#include <string_view>

#include "vat/graph.hpp"

namespace vat {

// graph6 interchange format: header N(n), then the upper triangle of the
// adjacency matrix column-major, packed into 6-bit chunks, each chunk +63.
std::string graph6_encode(const Graph& g);

// Strict decoder; raises parse_error with the byte offset of the first
// offending byte. Trailing padding bits must be zero.
Graph graph6_decode(std::string_view s);

} // namespace vat
