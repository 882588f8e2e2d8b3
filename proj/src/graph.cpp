#include "wcov/graph.hpp"

#include <stdexcept>
#include <string>

#include "wcov/errors.hpp"

namespace wcov {

Graph::Graph(int universe)
    : universe_(universe), adj_(static_cast<std::size_t>(universe)) {
  if (universe < 0 || universe > kMaxUniverse)
    throw capacity_error("universe size " + std::to_string(universe) +
                         " exceeds " + std::to_string(kMaxUniverse) + " slots");
}

void Graph::add_edge_unchecked(int a, int b) {
  adj_[static_cast<std::size_t>(a)] |= VertexSet::single(b);
  adj_[static_cast<std::size_t>(b)] |= VertexSet::single(a);
}

Graph Graph::edgeless(int n) {
  Graph g(n);
  g.active_ = VertexSet::first_n(n);
  return g;
}

Graph Graph::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  Graph g = edgeless(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge_unchecked(a, b);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  Graph g = edgeless(n);
  for (int v = 0; v < n; ++v) g.add_edge_unchecked(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  Graph g = edgeless(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("complete_bipartite: sides must be >= 1");
  Graph g = edgeless(m + n);
  for (int a = 0; a < m; ++a)
    for (int b = m; b < m + n; ++b) g.add_edge_unchecked(a, b);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = edgeless(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("from_edges: endpoint out of range");
    if (a == b) throw std::invalid_argument("from_edges: loop edge");
    g.add_edge_unchecked(a, b);
  }
  return g;
}

long Graph::edge_count() const {
  long deg_sum = 0;
  for (int v : active_) deg_sum += degree(v);
  return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a : active_)
    for (int b : adj_[static_cast<std::size_t>(a)])
      if (a < b) out.emplace_back(a, b);
  return out;
}

int Graph::min_degree() const {
  int best = 0;
  bool first = true;
  for (int v : active_) {
    int d = degree(v);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

bool Graph::is_complete() const {
  for (int v : active_)
    if (adj_[static_cast<std::size_t>(v)] != active_.without(v)) return false;
  return true;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool Graph::has_isolated_vertex() const {
  for (int v : active_)
    if (adj_[static_cast<std::size_t>(v)].empty()) return true;
  return false;
}

void Graph::require_active_subset(VertexSet s, const char* op) const {
  if (!s.subset_of(active_))
    throw std::invalid_argument(std::string(op) + ": set " + s.to_string() +
                                " contains inactive vertices");
}

VertexSet Graph::neighborhood(VertexSet s) const {
  require_active_subset(s, "neighborhood");
  VertexSet n;
  for (int v : s) n |= adj_[static_cast<std::size_t>(v)];
  return n - s;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
  return neighborhood(s) | s;
}

Graph Graph::masked_to(VertexSet keep) const {
  Graph g = *this;
  g.active_ = keep;
  for (int v = 0; v < universe_; ++v) {
    auto& row = g.adj_[static_cast<std::size_t>(v)];
    row = keep.contains(v) ? (row & keep) : VertexSet();
  }
  return g;
}

Graph Graph::localize(VertexSet s) const {
  require_active_subset(s, "localize");
  return masked_to(active_ - closed_neighborhood(s));
}

Graph Graph::delete_vertices(VertexSet a) const {
  require_active_subset(a, "delete_vertices");
  return masked_to(active_ - a);
}

Graph Graph::delete_vertex(int v) const {
  return delete_vertices(VertexSet::single(v));
}

Graph Graph::delete_edge(int a, int b) const {
  if (!has_edge(a, b))
    throw std::invalid_argument("delete_edge: " + std::to_string(a) + "-" +
                                std::to_string(b) + " is not an edge");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(a)] -= VertexSet::single(b);
  g.adj_[static_cast<std::size_t>(b)] -= VertexSet::single(a);
  return g;
}

Graph Graph::edge_localize(int a, int b) const {
  if (!has_edge(a, b))
    throw std::invalid_argument("edge_localize: " + std::to_string(a) + "-" +
                                std::to_string(b) + " is not an edge");
  VertexSet removed = adj_[static_cast<std::size_t>(a)] | adj_[static_cast<std::size_t>(b)];
  return masked_to(active_ - removed);
}

std::vector<Graph> Graph::components() const {
  std::vector<Graph> out;
  VertexSet rest = active_;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= adj_[static_cast<std::size_t>(v)];
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(masked_to(comp));
    rest -= comp;
  }
  return out;
}

Graph Graph::disjoint_union(const Graph& g, const Graph& h) {
  if (g.universe_ + h.universe_ > kMaxUniverse)
    throw capacity_error("disjoint_union: combined universe exceeds " +
                         std::to_string(kMaxUniverse) + " slots");
  Graph u(g.universe_ + h.universe_);
  u.active_ = g.active_ | VertexSet(h.active_.bits() << g.universe_);
  for (int v = 0; v < g.universe_; ++v) u.adj_[static_cast<std::size_t>(v)] = g.adj_[static_cast<std::size_t>(v)];
  for (int v = 0; v < h.universe_; ++v)
    u.adj_[static_cast<std::size_t>(g.universe_ + v)] =
        VertexSet(h.adj_[static_cast<std::size_t>(v)].bits() << g.universe_);
  return u;
}

Graph Graph::join(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  VertexSet left = g.active_;
  VertexSet right = VertexSet(h.active_.bits() << g.universe_);
  for (int a : left)
    for (int b : right) u.add_edge_unchecked(a, b);
  return u;
}

Graph Graph::corona_complete(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("corona_complete: p must be >= 1");
  int extra = g.order() * p;
  if (g.universe_ + extra > kMaxUniverse)
    throw capacity_error("corona_complete: result exceeds " +
                         std::to_string(kMaxUniverse) + " slots");
  Graph u(g.universe_ + extra);
  u.active_ = g.active_;
  for (int v = 0; v < g.universe_; ++v) u.adj_[static_cast<std::size_t>(v)] = g.adj_[static_cast<std::size_t>(v)];
  int slot = g.universe_;
  for (int v : g.active_) {
    for (int i = 0; i < p; ++i) {
      u.active_ = u.active_.with(slot + i);
      u.add_edge_unchecked(v, slot + i);
      for (int j = 0; j < i; ++j) u.add_edge_unchecked(slot + i, slot + j);
    }
    slot += p;
  }
  return u;
}

Graph Graph::complement(const Graph& g) {
  Graph c = g;
  for (int v : g.active_)
    c.adj_[static_cast<std::size_t>(v)] =
        g.active_.without(v) - g.adj_[static_cast<std::size_t>(v)];
  return c;
}

bool Graph::is_triangle_free() const {
  for (int a : active_)
    for (int b : adj_[static_cast<std::size_t>(a)]) {
      if (b <= a) continue;
      if (adj_[static_cast<std::size_t>(a)].intersects(adj_[static_cast<std::size_t>(b)])) return false;
    }
  return true;
}

bool Graph::is_locally_triangle_free() const {
  for (int v : active_)
    if (!localize(VertexSet::single(v)).is_triangle_free()) return false;
  return true;
}

}  // namespace wcov
