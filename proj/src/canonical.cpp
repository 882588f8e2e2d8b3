#include "wcov/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "wcov/errors.hpp"
#include "wcov/graph6.hpp"

namespace wcov {

namespace {

// State for the branch-and-bound search over degree-sorted relabelings.
// The upper adjacency triangle is packed into a uint64, bit t of the
// column-major order stored at position 63-t, so integer comparison is
// lexicographic bit comparison. n <= 11 keeps the triangle within 55 bits.
struct CanonSearch {
  int n = 0;
  std::array<std::uint32_t, 12> rows{};   // compacted adjacency
  std::array<int, 12> degree{};
  std::array<int, 12> target_degree{};    // sorted ascending
  std::array<int, 12> perm{};             // perm[pos] = original vertex
  std::array<int, 12> best_perm{};
  std::uint32_t used = 0;
  std::uint64_t best = ~std::uint64_t{0};

  void assign(int pos, std::uint64_t prefix, long nbits, bool tight) {
    if (pos == n) {
      if (prefix < best) {
        best = prefix;
        best_perm = perm;
      }
      return;
    }
    long shift = 63 - (nbits + pos - 1);  // low end of this column's window
    std::uint32_t best_window =
        pos == 0 ? 0
                 : static_cast<std::uint32_t>((best >> shift) &
                                              ((std::uint64_t{1} << pos) - 1));
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1u) continue;
      if (degree[static_cast<std::size_t>(w)] != target_degree[static_cast<std::size_t>(pos)]) continue;
      std::uint32_t window = 0;
      for (int i = 0; i < pos; ++i)
        window = (window << 1) |
                 ((rows[static_cast<std::size_t>(w)] >> perm[static_cast<std::size_t>(i)]) & 1u);
      if (tight && window > best_window) continue;
      perm[static_cast<std::size_t>(pos)] = w;
      used |= 1u << w;
      std::uint64_t child =
          pos == 0 ? prefix
                   : prefix | (static_cast<std::uint64_t>(window) << shift);
      assign(pos + 1, child, nbits + pos, tight && window == best_window);
      used &= ~(1u << w);
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g, int cap) {
  int n = g.order();
  if (n > cap)
    throw capacity_error("canonical_form: n(G)=" + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
  if (n > 11)
    throw capacity_error("canonical_form: supports n <= 11");
  if (n <= 1) return graph6_encode(compact(g));

  Graph c = compact(g);
  CanonSearch s;
  s.n = n;
  for (int v = 0; v < n; ++v) {
    s.rows[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(c.row(v).bits());
    s.degree[static_cast<std::size_t>(v)] = c.degree(v);
    s.target_degree[static_cast<std::size_t>(v)] = c.degree(v);
  }
  std::sort(s.target_degree.begin(), s.target_degree.begin() + n);
  s.assign(0, 0, 0, true);

  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (c.has_edge(s.best_perm[static_cast<std::size_t>(i)], s.best_perm[static_cast<std::size_t>(j)]))
        edges.emplace_back(i, j);
  return graph6_encode(Graph::from_edges(n, edges));
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v : a.active()) da.push_back(a.degree(v));
  for (int v : b.active()) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

}  // namespace wcov
