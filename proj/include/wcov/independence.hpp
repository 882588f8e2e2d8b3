#pragma once

#include <vector>

#include "wcov/graph.hpp"

namespace wcov {

// Full enumeration is exponential; theorem verification must never run on
// a truncated family, so the limit fails loudly (capacity_error).
inline constexpr int kIndependentSetEnumerationCap = 30;

struct IndependentSetFamily {
  enum class Kind { all, maximal, maximum };
  Kind kind = Kind::all;
  std::vector<VertexSet> sets;  // ascending by bitmask value
};

// True iff no two members of s are adjacent; s must be active.
bool is_independent(const Graph& g, VertexSet s);

// Independence number. Branch and bound on the densest remaining vertex
// with a greedy clique-cover upper bound; 0 on the empty graph.
int alpha(const Graph& g);

// All inclusion-maximal independent sets (pivot-based recursive expansion).
IndependentSetFamily maximal_independent_sets(const Graph& g);

// The maximal sets of size alpha(G).
IndependentSetFamily maximum_independent_sets(const Graph& g);

// Every independent set including the empty one. n(G) above the cap raises
// capacity_error.
IndependentSetFamily all_independent_sets(
    const Graph& g, int cap = kIndependentSetEnumerationCap);

// |N(S) - S| - |S|; for independent S this is |N(S)| - |S|.
int differential(const Graph& g, VertexSet s);

}  // namespace wcov
