#pragma once

#include <string>
#include <string_view>

#include "deckard/graph.hpp"

namespace deckard {

// graph6 interchange format for simple graphs with n <= 62: one header byte
// n+63, then the upper-triangle bit stream x01 x02 x12 x03 ... packed six
// bits per byte (first bit highest), zero-padded. Extended headers for
// n >= 63 are not supported.

inline LabeledGraph parse_graph6(std::string_view s) {
    if (s.empty()) throw ParseError("empty graph6 string");
    for (char ch : s) {
        unsigned byte = static_cast<unsigned char>(ch);
        if (byte < 63 || byte > 126)
            throw ParseError("graph6 byte out of range: " + std::to_string(byte));
    }
    if (s[0] == 126) throw ParseError("extended graph6 headers (n >= 63) unsupported");
    const int n = static_cast<unsigned char>(s[0]) - 63;
    const int bits = pair_slot_count(n);
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (s.size() != expected)
        throw ParseError("graph6 length " + std::to_string(s.size()) + ", expected " +
                         std::to_string(expected) + " for n=" + std::to_string(n));

    std::vector<Edge> edges;
    for (std::size_t byte_index = 1; byte_index < s.size(); ++byte_index) {
        const unsigned group = static_cast<unsigned char>(s[byte_index]) - 63;
        for (int bit = 0; bit < 6; ++bit) {
            const int slot = static_cast<int>(byte_index - 1) * 6 + bit;
            const bool set = (group >> (5 - bit)) & 1;
            if (slot >= bits) {
                if (set) throw ParseError("nonzero padding bits in graph6 string");
                continue;
            }
            if (set) edges.push_back(slot_pair(slot));
        }
    }
    return LabeledGraph(n, std::move(edges));
}

inline std::string emit_graph6(const LabeledGraph& g) {
    if (g.n > 62) throw ArgumentError("graph6 output limited to n <= 62");
    const int bits = pair_slot_count(g.n);
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    std::vector<std::uint8_t> flat(bits, 0);
    for (auto [i, j] : g.edges) flat[pair_slot(i, j)] = 1;
    for (int base = 0; base < bits; base += 6) {
        unsigned group = 0;
        for (int bit = 0; bit < 6; ++bit) {
            group <<= 1;
            if (base + bit < bits && flat[base + bit]) group |= 1;
        }
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

}  // namespace deckard
