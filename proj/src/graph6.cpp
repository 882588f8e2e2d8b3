#include "wcov/graph6.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "wcov/errors.hpp"

namespace wcov {

namespace {
constexpr int kBias = 63;
constexpr int kByteMax = 126;
}  // namespace

Graph graph6_decode(std::string_view line) {
  return graph6_decode(line, /*strict_padding=*/true, nullptr);
}

Graph graph6_decode(std::string_view line, bool strict_padding,
                    int* padding_warnings) {
  if (line.empty()) throw parse_error("graph6: empty string", 0);
  unsigned char head = static_cast<unsigned char>(line[0]);
  if (head < kBias || head > kByteMax)
    throw parse_error("graph6: header byte out of range 63..126", 0);
  if (head == kByteMax)
    throw parse_error("graph6: long form (n > 62) not supported", 0);
  int n = head - kBias;

  long bit_total = static_cast<long>(n) * (n - 1) / 2;
  std::size_t body_len = static_cast<std::size_t>((bit_total + 5) / 6);
  if (line.size() != 1 + body_len)
    throw parse_error("graph6: expected " + std::to_string(1 + body_len) +
                          " bytes for n=" + std::to_string(n) + ", got " +
                          std::to_string(line.size()),
                      line.size() < 1 + body_len ? line.size() : 1 + body_len);

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  int i = 0, j = 1;  // edge slots run x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (std::size_t k = 0; k < body_len; ++k) {
    unsigned char c = static_cast<unsigned char>(line[1 + k]);
    if (c < kBias || c > kByteMax)
      throw parse_error("graph6: body byte out of range 63..126", 1 + k);
    int group = c - kBias;
    for (int b = 5; b >= 0; --b, ++bit) {
      int x = (group >> b) & 1;
      if (bit >= bit_total) {
        if (x != 0) {
          if (strict_padding)
            throw parse_error("graph6: nonzero padding bits", 1 + k);
          if (padding_warnings) ++*padding_warnings;
        }
        continue;
      }
      if (x) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  if (n > kMaxUniverse) throw capacity_error("graph6_encode: n > 62");
  if (g.active() != VertexSet::first_n(n))
    throw std::invalid_argument(
        "graph6_encode: active set must be {0..n-1}; compact() first");

  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph compact(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.universe_size()), -1);
  int next = 0;
  for (int v : g.active()) label[static_cast<std::size_t>(v)] = next++;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    edges.emplace_back(label[static_cast<std::size_t>(a)],
                       label[static_cast<std::size_t>(b)]);
  return Graph::from_edges(next, edges);
}

}  // namespace wcov
