#pragma once

#include <string>

#include "wcov/graph.hpp"

namespace wcov {

// Canonicalization is a permutation search; the cap keeps it tractable.
inline constexpr int kDefaultCanonicalCap = 10;

// Canonical byte string: the minimum graph6 encoding of G over all vertex
// relabelings that sort the degree sequence ascending. Restricting to
// degree-sorted labelings is exact (the allowed permutation set is closed
// under isomorphism), and it cuts the search to within-class choices;
// branches are additionally pruned by bit-prefix comparison against the
// best encoding found so far. Two graphs yield equal strings iff they are
// isomorphic. Throws capacity_error when n(G) exceeds the cap.
std::string canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

// canonical_form equality with a degree-multiset fast path.
bool isomorphic(const Graph& a, const Graph& b, int cap = kDefaultCanonicalCap);

}  // namespace wcov
