#pragma once

#include <utility>
#include <vector>

#include "wcov/vertex_set.hpp"

namespace wcov {

inline constexpr int kMaxUniverse = 62;

// Undirected loopless graph over a fixed universe of vertex slots.
// Subgraph operations (localization, vertex deletion) deactivate slots
// instead of relabeling, so vertex identity is preserved across G_S, G - v
// and G_ab; re-masking a row is a single AND. Invariants: adjacency is
// symmetric, irreflexive, rows of inactive slots are empty, and every row
// is a subset of the active set. Instances are immutable values and safe
// to share across threads.
class Graph {
 public:
  Graph() = default;  // empty universe

  static Graph edgeless(int n);
  static Graph complete(int n);                    // n >= 1
  static Graph cycle(int n);                       // n >= 3
  static Graph path(int n);                        // n >= 1
  static Graph complete_bipartite(int m, int n);   // sides {0..m-1}, {m..m+n-1}
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int universe_size() const { return universe_; }
  VertexSet active() const { return active_; }
  int order() const { return active_.count(); }  // n(G)
  bool is_active(int v) const {
    return v >= 0 && v < universe_ && active_.contains(v);
  }
  // Open neighborhood of a single vertex, already masked to active slots.
  VertexSet row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int a, int b) const {
    return is_active(a) && is_active(b) && adj_[static_cast<std::size_t>(a)].contains(b);
  }
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // a < b, ascending
  int min_degree() const;                          // 0 on an empty graph
  bool is_complete() const;                        // active vertices pairwise adjacent
  bool is_connected() const;
  bool has_isolated_vertex() const;

  VertexSet neighborhood(VertexSet s) const;         // N(S); requires S active
  VertexSet closed_neighborhood(VertexSet s) const;  // N[S]
  Graph localize(VertexSet s) const;                 // G_S = G - N[S]
  Graph delete_vertices(VertexSet a) const;          // G - A
  Graph delete_vertex(int v) const;
  Graph delete_edge(int a, int b) const;             // G - ab; requires ab in E(G)
  Graph edge_localize(int a, int b) const;           // G_ab = G - (N(a) u N(b))
  // Masked subgraphs partitioning the active set, ordered by smallest label.
  std::vector<Graph> components() const;

  static Graph disjoint_union(const Graph& g, const Graph& h);
  static Graph join(const Graph& g, const Graph& h);
  // Attaches a private p-clique to every active vertex and joins the vertex
  // to all p of its new neighbors.
  static Graph corona_complete(const Graph& g, int p);
  static Graph complement(const Graph& g);

  bool is_triangle_free() const;
  bool is_locally_triangle_free() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  explicit Graph(int universe);
  void add_edge_unchecked(int a, int b);
  Graph masked_to(VertexSet keep) const;
  void require_active_subset(VertexSet s, const char* op) const;

  int universe_ = 0;
  VertexSet active_;
  std::vector<VertexSet> adj_;
};

}  // namespace wcov
