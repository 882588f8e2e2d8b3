#include "wcov/independence.hpp"

#include <algorithm>
#include <string>

#include "wcov/errors.hpp"

namespace wcov {

bool is_independent(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.active()))
    throw std::invalid_argument("is_independent: set " + s.to_string() +
                                " contains inactive vertices");
  for (int v : s)
    if (g.row(v).intersects(s)) return false;
  return true;
}

namespace {

// Number of cliques in a greedy cover of the vertices in `pool`; an upper
// bound on the independence number of the induced subgraph.
int clique_cover_bound(const Graph& g, VertexSet pool) {
  int cliques = 0;
  while (!pool.empty()) {
    int v = pool.lowest();
    VertexSet avail = pool & g.row(v);
    pool = pool.without(v);
    while (!avail.empty()) {
      int u = avail.lowest();
      pool = pool.without(u);
      avail = avail.without(u) & g.row(u);
    }
    ++cliques;
  }
  return cliques;
}

void alpha_branch(const Graph& g, VertexSet pool, int have, int& best) {
  if (pool.empty()) {
    best = std::max(best, have);
    return;
  }
  if (have + clique_cover_bound(g, pool) <= best) return;
  int pick = -1, pick_deg = -1;
  for (int v : pool) {
    int d = (g.row(v) & pool).count();
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  alpha_branch(g, pool - g.row(pick) - VertexSet::single(pick), have + 1, best);
  alpha_branch(g, pool.without(pick), have, best);
}

// Bron-Kerbosch with pivoting over the complement adjacency, reporting
// maximal independent sets of g.
struct MaximalEnum {
  const Graph& g;
  std::vector<VertexSet> nonadj;  // complement rows, indexed by slot
  std::vector<VertexSet>& out;

  MaximalEnum(const Graph& graph, std::vector<VertexSet>& sink)
      : g(graph), nonadj(static_cast<std::size_t>(graph.universe_size())), out(sink) {
    for (int v : g.active())
      nonadj[static_cast<std::size_t>(v)] = g.active().without(v) - g.row(v);
  }

  void expand(VertexSet current, VertexSet cand, VertexSet done) {
    if (cand.empty() && done.empty()) {
      out.push_back(current);
      return;
    }
    int pivot = -1, best_cover = -1;
    for (int u : cand | done) {
      int cover = (cand & nonadj[static_cast<std::size_t>(u)]).count();
      if (cover > best_cover) {
        best_cover = cover;
        pivot = u;
      }
    }
    VertexSet branch = cand - nonadj[static_cast<std::size_t>(pivot)];
    for (int v : branch) {
      expand(current.with(v), cand & nonadj[static_cast<std::size_t>(v)],
             done & nonadj[static_cast<std::size_t>(v)]);
      cand = cand.without(v);
      done = done.with(v);
    }
  }
};

void collect_independent(const Graph& g, VertexSet prefix, VertexSet cand,
                         std::vector<VertexSet>& out) {
  out.push_back(prefix);
  for (int v : cand) {
    cand = cand.without(v);
    collect_independent(g, prefix.with(v), cand - g.row(v), out);
  }
}

}  // namespace

int alpha(const Graph& g) {
  int best = 0;
  alpha_branch(g, g.active(), 0, best);
  return best;
}

IndependentSetFamily maximal_independent_sets(const Graph& g) {
  IndependentSetFamily fam;
  fam.kind = IndependentSetFamily::Kind::maximal;
  MaximalEnum e(g, fam.sets);
  e.expand(VertexSet(), g.active(), VertexSet());
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

IndependentSetFamily maximum_independent_sets(const Graph& g) {
  IndependentSetFamily fam;
  fam.kind = IndependentSetFamily::Kind::maximum;
  IndependentSetFamily maximal = maximal_independent_sets(g);
  int a = 0;
  for (VertexSet s : maximal.sets) a = std::max(a, s.count());
  for (VertexSet s : maximal.sets)
    if (s.count() == a) fam.sets.push_back(s);
  return fam;
}

IndependentSetFamily all_independent_sets(const Graph& g, int cap) {
  if (g.order() > cap)
    throw capacity_error("all_independent_sets: n(G)=" +
                         std::to_string(g.order()) + " exceeds cap " +
                         std::to_string(cap));
  IndependentSetFamily fam;
  fam.kind = IndependentSetFamily::Kind::all;
  collect_independent(g, VertexSet(), g.active(), fam.sets);
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

int differential(const Graph& g, VertexSet s) {
  return g.neighborhood(s).count() - s.count();
}

}  // namespace wcov
