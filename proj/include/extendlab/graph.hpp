#ifndef EXTENDLAB_GRAPH_HPP
#define EXTENDLAB_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace extendlab {

inline constexpr int kMaxOrder = 64;

/// Subset of the vertex indices 0..63 of some graph, stored as one word.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
  }

  constexpr bool contains(int v) const { return bits >> v & 1; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr int min() const { return std::countr_zero(bits); }

  constexpr VertexSet& add(int v) {
    bits |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& remove(int v) {
    bits &= ~(std::uint64_t{1} << v);
    return *this;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
    friend bool operator!=(iterator a, iterator b) { return a.rest != b.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }
};

/// Undirected edge, kept normalized with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable simple undirected graph on 1..64 vertices with bitset adjacency
/// rows. Construction goes through validating factories only, so symmetry and
/// loop-freeness hold for every live instance.
class Graph {
 public:
  Graph() : n_(1), adj_(1, 0) {}

  static Graph from_adjacency_rows(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be between 1 and 64");
    const std::uint64_t range = VertexSet::full(n).bits;
    for (int u = 0; u < n; ++u) {
      if (rows[static_cast<std::size_t>(u)] & ~range)
        throw std::invalid_argument("adjacency bit out of vertex range");
      if (rows[static_cast<std::size_t>(u)] >> u & 1)
        throw std::invalid_argument("self-loops are not allowed");
    }
    for (int u = 0; u < n; ++u)
      for (int v : VertexSet(rows[static_cast<std::size_t>(u)]))
        if (!(rows[static_cast<std::size_t>(v)] >> u & 1))
          throw std::invalid_argument("adjacency must be symmetric");
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)] >> v & 1; }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
  }

  /// Edges in ascending lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (v > u) out.push_back(Edge{u, v});
    return out;
  }

  bool has_edge(Edge e) const {
    return e.u >= 0 && e.u < n_ && e.v >= 0 && e.v < n_ && e.u != e.v &&
           adjacent(e.u, e.v);
  }

  Graph with_edge_removed(Edge e) const {
    if (!has_edge(e)) throw std::invalid_argument("edge not present in graph");
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
    g.adj_[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be between 1 and 64");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  return Graph::from_adjacency_rows(std::move(rows));
}

inline int min_degree(const Graph& g) {
  int best = kMaxOrder;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

namespace detail {

/// Connected component of `start` in g with `removed` vertices deleted and the
/// optional edge deleted.
inline VertexSet reach_from(const Graph& g, int start, VertexSet removed,
                            std::optional<Edge> removed_edge) {
  VertexSet seen = VertexSet::of({start});
  std::uint64_t frontier = seen.bits;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v : VertexSet(frontier)) {
      std::uint64_t nb = g.neighbors(v).bits & ~removed.bits;
      if (removed_edge) {
        if (v == removed_edge->u) nb &= ~(std::uint64_t{1} << removed_edge->v);
        if (v == removed_edge->v) nb &= ~(std::uint64_t{1} << removed_edge->u);
      }
      next |= nb;
    }
    frontier = next & ~seen.bits;
    seen.bits |= next;
  }
  return seen;
}

inline bool connected_ignoring(const Graph& g, VertexSet removed) {
  VertexSet alive = g.vertices() - removed;
  if (alive.empty()) return true;
  return reach_from(g, alive.min(), removed, std::nullopt) == alive;
}

/// Visits every size-c subset of `pool` as a VertexSet, in lexicographic order
/// of the ascending index lists. The visitor returns false to stop early;
/// the function returns false iff stopped.
template <class Fn>
bool for_each_subset(const std::vector<int>& pool, int c, Fn&& visit) {
  const int m = static_cast<int>(pool.size());
  if (c < 0 || c > m) return true;
  if (c == 0) return visit(VertexSet{});
  std::vector<int> idx(static_cast<std::size_t>(c));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    VertexSet s;
    for (int i : idx) s.add(pool[static_cast<std::size_t>(i)]);
    if (!visit(s)) return false;
    int i = c - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - c + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < c; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  return detail::connected_ignoring(g, VertexSet{});
}

/// Components of the graph after deleting `removed` vertices and, optionally,
/// one edge between two surviving vertices.
struct ComponentSplit {
  std::vector<VertexSet> components;  // ordered by smallest member
  int odd_count = 0;
  int even_count = 0;
};

inline ComponentSplit component_split(const Graph& g, VertexSet removed,
                                      std::optional<Edge> removed_edge = {}) {
  if (removed.bits & ~g.vertices().bits)
    throw std::invalid_argument("removed set out of vertex range");
  if (removed == g.vertices())
    throw std::invalid_argument("cannot remove every vertex");
  if (removed_edge) {
    if (removed_edge->u < 0 || removed_edge->v >= g.order() ||
        removed_edge->u >= removed_edge->v)
      throw std::invalid_argument("removed edge out of range");
    if (removed.contains(removed_edge->u) || removed.contains(removed_edge->v))
      throw std::invalid_argument("removed edge endpoint inside removed set");
  }
  ComponentSplit split;
  VertexSet todo = g.vertices() - removed;
  while (!todo.empty()) {
    VertexSet comp = detail::reach_from(g, todo.min(), removed, removed_edge);
    todo = todo - comp;
    (comp.count() % 2 ? split.odd_count : split.even_count) += 1;
    split.components.push_back(comp);
  }
  return split;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new index -> original index, ascending
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
  if (s.bits & ~g.vertices().bits)
    throw std::invalid_argument("vertex set out of range");
  std::vector<int> to_parent = s.to_vector();
  std::array<int, kMaxOrder> rank{};
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    rank[static_cast<std::size_t>(to_parent[i])] = static_cast<int>(i);
  std::vector<std::uint64_t> rows(to_parent.size(), 0);
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    for (int w : VertexSet(g.neighbors(to_parent[i]).bits & s.bits))
      rows[i] |= std::uint64_t{1} << rank[static_cast<std::size_t>(w)];
  return {Graph::from_adjacency_rows(std::move(rows)), std::move(to_parent)};
}

/// True iff g has no vertex cut of size < l. Decided by exhaustive subset
/// deletion, which is the reference semantics at desk scale. K_n counts as
/// (n-1)-connected.
inline bool is_l_connected(const Graph& g, int l) {
  if (l < 1 || l >= g.order())
    throw std::invalid_argument("connectivity parameter out of range");
  if (!is_connected(g)) return false;
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  for (int c = 1; c < l; ++c) {
    bool intact = detail::for_each_subset(
        all, c, [&](VertexSet s) { return detail::connected_ignoring(g, s); });
    if (!intact) return false;
  }
  return true;
}

struct ClawWitness {
  int center = 0;
  std::array<int, 3> leaves{};  // ascending
};

/// Lexicographically smallest induced K_{1,3}, if any: smallest center first,
/// then smallest sorted leaf triple.
inline std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const std::vector<int> nb = g.neighbors(c).to_vector();
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[static_cast<std::size_t>(i)], nb[static_cast<std::size_t>(j)])) continue;
        for (int k = j + 1; k < d; ++k) {
          int a = nb[static_cast<std::size_t>(i)], b = nb[static_cast<std::size_t>(j)],
              e = nb[static_cast<std::size_t>(k)];
          if (!g.adjacent(a, e) && !g.adjacent(b, e))
            return ClawWitness{c, {a, b, e}};
        }
      }
  }
  return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(v)] ^ 1;
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace extendlab

#endif  // EXTENDLAB_GRAPH_HPP
