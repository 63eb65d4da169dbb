#ifndef EXTENDLAB_ORACLE_HPP
#define EXTENDLAB_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "extendlab/graph.hpp"

// Brute-force reference implementations. Everything here decides by direct
// enumeration over the defining quantifier and shares no algorithmic machinery
// with the production paths it is used to cross-check (no blossom search, no
// pruning, no partition refinement).

namespace extendlab::oracle {

/// Maximum matching size by branching on the lowest live vertex: leave it
/// unmatched, or match it to each live neighbor.
inline int max_matching_size(const Graph& g) {
  auto rec = [&](auto&& self, std::uint64_t alive) -> int {
    if (!alive) return 0;
    const int v = std::countr_zero(alive);
    const std::uint64_t rest = alive & ~(std::uint64_t{1} << v);
    int best = self(self, rest);
    for (int w : VertexSet(g.neighbors(v).bits & rest))
      best = std::max(best, 1 + self(self, rest & ~(std::uint64_t{1} << w)));
    return best;
  };
  return rec(rec, g.vertices().bits);
}

inline bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && oracle::max_matching_size(g) * 2 == g.order();
}

namespace detail {

inline bool connected_masked(const Graph& g, std::uint64_t alive) {
  if (!alive) return true;
  std::uint64_t seen = alive & (~alive + 1);  // lowest set bit
  for (;;) {
    std::uint64_t next = seen;
    for (int v : VertexSet(seen)) next |= g.neighbors(v).bits & alive;
    if (next == seen) break;
    seen = next;
  }
  return seen == alive;
}

/// Enumerates matchings of size exactly k by pairing the lowest live vertex
/// with each live neighbor or dropping it. The visitor receives the covered
/// vertex set and returns false to stop.
template <class Visit>
bool each_k_matching(const Graph& g, int k, Visit&& visit) {
  auto rec = [&](auto&& self, std::uint64_t alive, std::uint64_t covered, int left) -> bool {
    if (left == 0) return visit(covered);
    if (!alive) return true;
    const int v = std::countr_zero(alive);
    const std::uint64_t rest = alive & ~(std::uint64_t{1} << v);
    for (int w : VertexSet(g.neighbors(v).bits & rest)) {
      const std::uint64_t pair =
          (std::uint64_t{1} << v) | (std::uint64_t{1} << w);
      if (!self(self, rest & ~(std::uint64_t{1} << w), covered | pair, left - 1))
        return false;
    }
    return self(self, rest, covered, left);
  };
  return rec(rec, g.vertices().bits, 0, k);
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  return detail::connected_masked(g, g.vertices().bits);
}

/// Definition-literal k-extendability: a perfect matching exists and removing
/// the vertices of any k-matching leaves a graph with a perfect matching.
/// Same total-predicate conventions as the production check.
inline bool k_extendable(const Graph& g, int k) {
  if (g.order() % 2) throw std::invalid_argument("k-extendability requires even order");
  if (!oracle::is_connected(g))
    throw std::invalid_argument("k-extendability requires a connected graph");
  if (k < 1 || k > g.order() / 2 - 1) throw std::invalid_argument("k out of range");
  if (!oracle::has_perfect_matching(g)) return false;
  return detail::each_k_matching(g, k, [&](std::uint64_t covered) {
    const std::uint64_t rest = g.vertices().bits & ~covered;
    if (!rest) return true;
    const auto sub = induced_subgraph(g, VertexSet(rest));
    return oracle::has_perfect_matching(sub.graph);
  });
}

/// Connectivity by checking every vertex subset of size < l with union-find.
inline bool l_connected(const Graph& g, int l) {
  if (l < 1 || l >= g.order())
    throw std::invalid_argument("connectivity parameter out of range");
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  for (int c = 0; c < l; ++c) {
    const bool intact = extendlab::detail::for_each_subset(all, c, [&](VertexSet cut) {
      std::iota(parent.begin(), parent.end(), 0);
      for (int u = 0; u < n; ++u) {
        if (cut.contains(u)) continue;
        for (int v : VertexSet(g.neighbors(u).bits & ~cut.bits))
          if (v > u) parent[static_cast<std::size_t>(find(u))] = find(v);
      }
      int roots = 0;
      for (int v = 0; v < n; ++v)
        if (!cut.contains(v) && find(v) == v) ++roots;
      return roots == 1;
    });
    if (!intact) return false;
  }
  return true;
}

struct ClassCounts {
  std::uint64_t all = 0;
  std::uint64_t connected = 0;
};

/// Groups all 2^C(n,2) labeled graphs into isomorphism classes by walking each
/// relabeling orbit with adjacent-transposition generators. n <= 7 keeps the
/// visited bitmap at 2^21 entries.
inline ClassCounts count_classes_by_orbit(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("orbit grouping supports 1..7 vertices");
  const int pairs = n * (n - 1) / 2;
  auto pair_index = [&](int i, int j) {  // i < j
    return j * (j - 1) / 2 + i;
  };
  // remap[s][t]: image of pair t under the transposition (s, s+1)
  std::vector<std::vector<int>> remap(static_cast<std::size_t>(n > 1 ? n - 1 : 0),
                                      std::vector<int>(static_cast<std::size_t>(pairs)));
  for (int s = 0; s + 1 < n; ++s)
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        auto swap_one = [&](int x) { return x == s ? s + 1 : x == s + 1 ? s : x; };
        int a = swap_one(i), b = swap_one(j);
        if (a > b) std::swap(a, b);
        remap[static_cast<std::size_t>(s)][static_cast<std::size_t>(pair_index(i, j))] =
            pair_index(a, b);
      }
  auto connected_mask = [&](std::uint64_t mask) {
    if (n == 1) return true;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (mask >> pair_index(i, j) & 1) {
          rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
          rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
    std::uint64_t seen = 1;
    for (;;) {
      std::uint64_t next = seen;
      for (int v : VertexSet(seen)) next |= rows[static_cast<std::size_t>(v)];
      if (next == seen) break;
      seen = next;
    }
    return seen == (n >= 64 ? ~0ull : (std::uint64_t{1} << n) - 1);
  };
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<bool> visited(total, false);
  ClassCounts counts;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t root = 0; root < total; ++root) {
    if (visited[root]) continue;
    ++counts.all;
    if (connected_mask(root)) ++counts.connected;
    visited[root] = true;
    stack.assign(1, root);
    while (!stack.empty()) {
      const std::uint64_t mask = stack.back();
      stack.pop_back();
      for (int s = 0; s + 1 < n; ++s) {
        std::uint64_t image = 0;
        for (int t : VertexSet(mask))
          image |= std::uint64_t{1}
                   << remap[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (!visited[image]) {
          visited[image] = true;
          stack.push_back(image);
        }
      }
    }
  }
  return counts;
}

/// Number of isomorphism classes of graphs on n vertices by Burnside's lemma:
/// average of 2^(pair-orbit cycles) over all vertex permutations.
inline std::uint64_t class_count_cycle_index(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("cycle-index count supports 1..10 vertices");
  const int pairs = n * (n - 1) / 2;
  auto pair_index = [&](int i, int j) { return j * (j - 1) / 2 + i; };
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  unsigned __int128 acc = 0;
  std::uint64_t count = 0;
  std::vector<char> seen(static_cast<std::size_t>(pairs));
  do {
    ++count;
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        int t = pair_index(i, j);
        if (seen[static_cast<std::size_t>(t)]) continue;
        ++cycles;
        while (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = 1;
          // recover the pair for t, then apply the permutation
          int jj = 1;
          while (pair_index(0, jj + 1) <= t) ++jj;
          int ii = t - pair_index(0, jj);
          int a = perm[static_cast<std::size_t>(ii)], b = perm[static_cast<std::size_t>(jj)];
          if (a > b) std::swap(a, b);
          t = pair_index(a, b);
        }
      }
    acc += static_cast<unsigned __int128>(1) << cycles;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint64_t>(acc / count);
}

inline std::uint64_t labeled_count(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("labeled count supports 1..10 vertices");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// Number of connected labeled graphs on n vertices by the standard
/// subtraction recurrence over the component containing vertex 1.
inline std::uint64_t labeled_connected_count(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("labeled connected count supports 1..10 vertices");
  std::vector<std::vector<std::uint64_t>> choose(11, std::vector<std::uint64_t>(11, 0));
  for (int a = 0; a <= 10; ++a) {
    choose[static_cast<std::size_t>(a)][0] = 1;
    for (int b = 1; b <= a; ++b)
      choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
          choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
  }
  std::vector<std::uint64_t> d(static_cast<std::size_t>(n + 1), 0);
  d[1] = 1;
  for (int m = 2; m <= n; ++m) {
    std::uint64_t total = std::uint64_t{1} << (m * (m - 1) / 2);
    for (int k = 1; k < m; ++k)
      total -= choose[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] *
               d[static_cast<std::size_t>(k)] *
               (std::uint64_t{1} << ((m - k) * (m - k - 1) / 2));
    d[static_cast<std::size_t>(m)] = total;
  }
  return d[static_cast<std::size_t>(n)];
}

}  // namespace extendlab::oracle

#endif  // EXTENDLAB_ORACLE_HPP
