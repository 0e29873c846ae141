#pragma once

#include "erstab/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace erstab {

// graph6 text encoding without the optional ">>graph6<<" header. n <= 62 uses a
// one-byte size prefix; 63 and 64 use '~' followed by three 6-bit bytes.
std::string graph6_encode(const Graph& g);

// Throws Graph6Error (with byte offset) on a malformed header, a truncated or
// overlong payload, a byte outside 63..126, or n > 64.
Graph graph6_decode(std::string_view text);

// Reads newline-separated graph6 records, skipping blank lines. Errors carry the
// offset within the offending line; the line number (1-based) is prefixed to the
// message.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace erstab
