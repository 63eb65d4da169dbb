#ifndef EXTENDLAB_GRAPH6_HPP
#define EXTENDLAB_GRAPH6_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extendlab/graph.hpp"

namespace extendlab {

// Short-form graph6: one header byte 63+n (n <= 62), then the upper-triangle
// bits x(0,1), x(0,2), x(1,2), x(0,3), ... in column order, packed six per
// byte, most significant bit first, each byte offset by 63 and the final byte
// zero-padded. One graph per text line.

inline Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  const unsigned char header = static_cast<unsigned char>(line[0]);
  if (header == 126)
    throw std::invalid_argument("graph6: order beyond short form (n > 62)");
  if (header < 63 || header > 125)
    throw std::invalid_argument("graph6: malformed header byte");
  const int n = header - 63;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (line.size() < 1 + body) throw std::invalid_argument("graph6: truncated body");
  if (line.size() > 1 + body)
    throw std::invalid_argument("graph6: trailing garbage after body");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t t = 0;
  int i = 0, j = 1;
  for (std::size_t b = 0; b < body; ++b) {
    const unsigned char c = static_cast<unsigned char>(line[1 + b]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: body byte out of range");
    const unsigned bits = c - 63u;
    for (int k = 5; k >= 0; --k, ++t) {
      const bool bit = (bits >> k) & 1u;
      if (t >= pairs) {
        if (bit) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (bit) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_adjacency_rows(std::move(rows));
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6: order exceeds short form (n > 62)");
  std::string out;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  out.reserve(1 + (pairs + 5) / 6);
  out.push_back(static_cast<char>(63 + n));
  unsigned acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace extendlab

#endif  // EXTENDLAB_GRAPH6_HPP
