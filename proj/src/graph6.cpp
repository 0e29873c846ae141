#include "erstab/graph6.hpp"

#include "erstab/errors.hpp"

#include <istream>

namespace erstab {

namespace {

constexpr int kBias = 63;

std::size_t payload_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view text) {
    auto value_at = [&](std::size_t pos) {
        if (pos >= text.size()) throw Graph6Error("truncated graph6", pos);
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > 126) throw Graph6Error("byte outside graph6 range", pos);
        return c - kBias;
    };

    if (text.empty()) throw Graph6Error("empty graph6 record", 0);
    std::size_t pos = 0;
    int n = value_at(pos++);
    if (n == 63) {
        if (pos < text.size() && text[pos] == '~')
            throw Graph6Error("8-byte size form exceeds capacity 64", pos);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | value_at(pos++);
        if (n <= 62) throw Graph6Error("non-canonical long size form", 1);
    }
    if (n > kMaxVertices) throw Graph6Error("graph on " + std::to_string(n) + " vertices exceeds capacity 64", 0);

    Graph g(n);
    const std::size_t header = pos;
    const std::size_t need = payload_bytes(n);
    if (text.size() < header + need) throw Graph6Error("truncated graph6 payload", text.size());
    if (text.size() > header + need) throw Graph6Error("trailing bytes after graph6 payload", header + need);

    std::size_t bit_index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit_index) {
            const int chunk = value_at(header + bit_index / 6);
            if ((chunk >> (5 - bit_index % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (std::size_t b = header; b < text.size(); ++b) value_at(b);
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error("line " + std::to_string(line_no) + ": " + e.reason(), e.offset());
        }
    }
    return out;
}

} // namespace erstab
