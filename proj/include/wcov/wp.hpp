#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcov/graph.hpp"

namespace wcov {

enum class WpDecider { definitional, deletion, recursive };

const char* to_string(WpDecider d);

// Decision record for one (G, p) membership query.
struct WpVerdict {
  std::string graph_id;  // graph6 of the compacted input
  int p = 1;
  bool member = false;
  WpDecider decider = WpDecider::definitional;
  // Failing disjoint independent family (A_1..A_p) for the definitional
  // decider, or the packing (S_1..S_p) extending the all-empty family on
  // success.
  std::vector<VertexSet> witness_tuple;
  std::optional<VertexSet> witness_set;  // deletion decider: the bad A, |A| = p-1
  std::optional<int> witness_vertex;     // recursive decider: the bad localization
  std::string note;                      // "order" when n(G) < p
};

struct SheddingReport {
  int vertex = -1;
  bool shedding = false;
  // Present iff not shedding: an independent S of G_v with N(v) contained
  // in N(S), i.e. surplus |N(v) - N(S)| = 0. Smallest bitmask wins.
  std::optional<VertexSet> blocking_set;
};

// The five independently evaluated conditions of the W_2 equivalence; the
// theorem suite asserts they agree, the struct never assumes it.
struct W2Flags {
  bool definitional = false;            // W_2 membership
  bool differential_monotone = false;   // A subset of B => d(A) <= d(B), over Ind(G)
  bool all_shedding = false;            // every vertex sheds
  bool no_isolating_localization = false;  // no independent S isolates a vertex of G_S
  bool localizations_in_w2 = false;     // when alpha >= 2: every G_v in W_2, alpha one less

  bool all_equal() const {
    return definitional == differential_monotone &&
           definitional == all_shedding &&
           definitional == no_isolating_localization &&
           definitional == localizations_in_w2;
  }
};

// Three routes for "does G - v stay in W_p": the direct decision, the
// minimum neighborhood surplus over independent sets of G_v, and the
// localized-degree condition evaluated on materialized G_S graphs.
struct VertexDeletionWp {
  bool in_wp = false;
  int min_surplus = 0;            // min |N(v) - N(S)| over independent S of G_v
  bool no_small_localized_degree = false;  // no S with deg_{G_S}(v) <= p-1
};

struct ExtensionCheck {
  bool part_a = false;  // p disjoint B_i avoiding A with A u B_i maximum
  bool part_b = false;  // p-1 disjoint maximum sets avoiding A (true when p = 1)
};

// Concurrent-safe memo for the recursive deciders, keyed by canonical form
// (and p). Inserts are idempotent; duplicated computation is harmless.
class WpMemo {
 public:
  std::optional<bool> find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, bool value) {
    std::unique_lock lock(mu_);
    map_.emplace(key, value);
  }

  static WpMemo& global();

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, bool> map_;
};

// W_1 test: every maximal independent set has size alpha(G). n(G) >= 1.
bool is_well_covered(const Graph& g);

// Localization recursion for well-coveredness; agrees with is_well_covered.
// Memoized on canonical form (pass nullptr for the process-wide cache).
bool is_well_covered_recursive(const Graph& g, WpMemo* memo = nullptr);

// Surplus route, cross-checked against the definitional route on every
// call; disagreement raises logic_error.
SheddingReport is_shedding(const Graph& g, int v);

// Definitional route alone: every independent set of G_v extends by some
// neighbor of v.
bool is_shedding_definitional(const Graph& g, int v);

// Exact decision from the defining quantifier: every family of p pairwise
// disjoint independent sets extends to p pairwise disjoint maximum
// independent sets. Families are checked unordered, once, and only the
// inclusion-maximal ones (a failing family forces a failing maximal
// super-family).
WpVerdict is_wp_definitional(const Graph& g, int p);

// Same decision without the maximal-family reduction: every family is
// checked. Validation oracle for the reduction; exponentially slower.
WpVerdict is_wp_definitional_full(const Graph& g, int p);

// Via (p-1)-subset deletions: all G - A well-covered with unchanged alpha.
WpVerdict is_wp_deletion(const Graph& g, int p);

// Via the localization recursion; memoized on (canonical form, p).
WpVerdict is_wp_recursive(const Graph& g, int p, WpMemo* memo = nullptr);

// Definitional membership, total on every graph (empty graph is a
// non-member for all p >= 1). Suites use this where subgraphs may vanish.
bool wp_member(const Graph& g, int p);

// Largest p with G in W_p, or 0 when G is not well-covered. n(G) >= 1.
int wp_order(const Graph& g);

// Requires G well-covered without isolated vertices.
W2Flags w2_characterizations(const Graph& g);

// Requires v active and non-isolated; G in W_p is the caller's obligation.
VertexDeletionWp vertex_deletion_stays_wp(const Graph& g, int v, int p);

// Requires A independent with |A| < alpha(G); G in W_p without isolated
// vertices is the caller's obligation.
ExtensionCheck extension_property(const Graph& g, VertexSet a, int p);

// For every independent S with |S| < alpha(G): G_S in W_p, and for p > 1
// also no isolated vertex in G_S. G in W_p is the caller's obligation.
bool localization_closure_check(const Graph& g, int p);

}  // namespace wcov
