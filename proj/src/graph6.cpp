#include "vat/graph6.hpp"

namespace vat {

namespace {

constexpr long long kMaxShortOrder = 62;
constexpr long long kMaxMediumOrder = 258047; // 2^18 - 1

} // namespace

std::string graph6_encode(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= kMaxShortOrder) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= kMaxMediumOrder) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw param_error("graph6_encode: order too large");
    }
    int chunk = 0;
    int bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - bits))));
    return out;
}

Graph graph6_decode(std::string_view s) {
    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= s.size()) throw parse_error("graph6: truncated input", i);
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of printable range", i);
        return c - 63;
    };

    long long n;
    int first = byte_at(0);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // 126 prefix: 18-bit order in three bytes (the 8-byte form is
        // beyond any order this library handles).
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw parse_error("graph6: orders beyond 2^18-1 unsupported", 1);
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
        pos = 4;
    }

    Graph g(static_cast<int>(n));
    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != pos + nbytes)
        throw parse_error("graph6: wrong length for order " + std::to_string(n),
                          s.size() < pos + nbytes ? s.size() : pos + nbytes);

    long long bit = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < nbytes; ++i) {
        int chunk = byte_at(pos + i);
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (chunk >> k) & 1;
            if (bit < nbits) {
                if (b) g.add_edge(u, v);
                if (++u == v) {
                    u = 0;
                    ++v;
                }
            } else if (b) {
                throw parse_error("graph6: nonzero padding bits", pos + i);
            }
        }
    }
    return g;
}

} // namespace vat
