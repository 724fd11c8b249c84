#pragma once

#include <string>
#include <string_view>

#include "gooddecomp/graph.hpp"

namespace gooddecomp {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6, single-byte size form only (n <= 62): first byte n+63, then the
// upper adjacency triangle in column-major pair order (0,1),(0,2),(1,2),
// (0,3),... packed 6 bits per byte MSB-first, each byte offset by 63,
// trailing bits zero.

inline constexpr int kGraph6MaxVertices = 62;

inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line");
  if (line[0] == 126)
    throw Graph6Error("graph6 multi-byte size form (n > 62) not supported");
  if (line[0] < 63 || line[0] > 63 + kGraph6MaxVertices)
    throw Graph6Error("malformed graph6 length byte");
  const int n = line[0] - 63;
  const int nbits = n * (n - 1) / 2;
  const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (line.size() != 1 + nbytes)
    throw Graph6Error("graph6 body has wrong length for n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (size_t i = 0; i < nbytes; ++i) {
    const char c = line[1 + i];
    if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range");
    const int val = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (val >> k) & 1;
      if (bit >= nbits) {
        if (set) throw Graph6Error("graph6 trailing padding bits nonzero");
        continue;
      }
      if (set) {
        // bit index -> pair (i,j), j minimal with j(j-1)/2 > bit
        int j = 1;
        while ((j + 1) * j / 2 <= bit) ++j;
        edges.emplace_back(bit - j * (j - 1) / 2, j);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices)
    throw Graph6Error("graph6 encoding supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nacc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nacc == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nacc = 0;
      }
    }
  }
  if (nacc > 0) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
  return out;
}

}  // namespace gooddecomp
