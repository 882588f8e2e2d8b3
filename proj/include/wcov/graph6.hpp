#pragma once

#include <string>
#include <string_view>

#include "wcov/graph.hpp"

namespace wcov {

// Short-form graph6 codec, n <= 62. First byte is n+63, followed by
// ceil(n(n-1)/2 / 6) bytes in 63..126 carrying the upper adjacency
// triangle x(0,1), x(0,2), x(1,2), x(0,3), ... column-major, 6 bits per
// byte, high bit first, zero-padded to a multiple of 6.

// Strict decode: rejects bytes outside 63..126, wrong length, and nonzero
// padding bits, all as parse_error with the byte offset.
Graph graph6_decode(std::string_view line);

// When strict_padding is false, nonzero padding bits are tolerated and
// counted into *padding_warnings instead of raising. Other defects still
// raise parse_error.
Graph graph6_decode(std::string_view line, bool strict_padding,
                    int* padding_warnings);

// Requires active(G) == {0..n-1}; use compact() first for masked graphs.
std::string graph6_encode(const Graph& g);

// Relabels the active vertices to 0..n-1, preserving their relative order.
Graph compact(const Graph& g);

}  // namespace wcov
