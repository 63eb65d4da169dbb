#ifndef EXTENDLAB_MATCHING_HPP
#define EXTENDLAB_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "extendlab/graph.hpp"

namespace extendlab {

struct Matching {
  std::vector<Edge> edges;  // pairwise disjoint, kept in ascending order

  int size() const { return static_cast<int>(edges.size()); }
  VertexSet covered() const {
    VertexSet s;
    for (Edge e : edges) {
      s.add(e.u);
      s.add(e.v);
    }
    return s;
  }
  friend bool operator==(const Matching&, const Matching&) = default;
};

inline Matching make_matching(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return Matching{std::move(edges)};
}

inline bool is_matching_of(const Graph& g, const Matching& m) {
  VertexSet seen;
  for (Edge e : m.edges) {
    if (!g.has_edge(e)) return false;
    if (seen.contains(e.u) || seen.contains(e.v)) return false;
    seen.add(e.u);
    seen.add(e.v);
  }
  return true;
}

namespace detail {

// Edmonds' blossom algorithm in the classic O(V^3) formulation: grow an
// alternating tree from each exposed vertex; when two even-level vertices
// meet, contract the odd cycle by re-basing its vertices onto the cycle's
// lowest common ancestor so the search can pass through the blossom.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : n_(g.order()),
        adj_(static_cast<std::size_t>(n_)),
        mate_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_)),
        in_queue_(static_cast<std::size_t>(n_), 0),
        in_blossom_(static_cast<std::size_t>(n_), 0) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).to_vector();
  }

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v)
      if (mate_[static_cast<std::size_t>(v)] < 0)
        for (int w : adj_[static_cast<std::size_t>(v)])
          if (mate_[static_cast<std::size_t>(w)] < 0) {
            mate_[static_cast<std::size_t>(v)] = w;
            mate_[static_cast<std::size_t>(w)] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (mate_[static_cast<std::size_t>(v)] < 0) augment_from(v);
    return mate_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<char> mark(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      mark[static_cast<std::size_t>(a)] = 1;
      if (mate_[static_cast<std::size_t>(a)] < 0) break;
      a = base_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (mark[static_cast<std::size_t>(b)]) return b;
      b = base_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])])];
    }
  }

  void mark_blossom_path(int v, int stop, int child) {
    while (base_[static_cast<std::size_t>(v)] != stop) {
      const int mv = mate_[static_cast<std::size_t>(v)];
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  void alternate_path_to(int v) {
    while (v >= 0) {
      const int pv = parent_[static_cast<std::size_t>(v)];
      const int next = mate_[static_cast<std::size_t>(pv)];
      mate_[static_cast<std::size_t>(v)] = pv;
      mate_[static_cast<std::size_t>(pv)] = v;
      v = next;
    }
  }

  bool augment_from(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    std::vector<int> queue{root};
    in_queue_[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(w)] ||
            mate_[static_cast<std::size_t>(v)] == w)
          continue;
        if (w == root || (mate_[static_cast<std::size_t>(w)] >= 0 &&
                          parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(w)])] >= 0)) {
          const int stop = lowest_common_base(v, w);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_blossom_path(v, stop, w);
          mark_blossom_path(w, stop, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = stop;
              if (!in_queue_[static_cast<std::size_t>(i)]) {
                in_queue_[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[static_cast<std::size_t>(w)] < 0) {
          parent_[static_cast<std::size_t>(w)] = v;
          if (mate_[static_cast<std::size_t>(w)] < 0) {
            alternate_path_to(w);
            return true;
          }
          const int mw = mate_[static_cast<std::size_t>(w)];
          if (!in_queue_[static_cast<std::size_t>(mw)]) {
            in_queue_[static_cast<std::size_t>(mw)] = 1;
            queue.push_back(mw);
          }
        }
      }
    }
    return false;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> in_queue_, in_blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching. The size is unique; the edge set returned is
/// the deterministic one produced by scanning vertices in increasing order.
inline Matching maximum_matching(const Graph& g) {
  const std::vector<int> mate = detail::BlossomMatcher(g).run();
  std::vector<Edge> out;
  for (int v = 0; v < g.order(); ++v)
    if (mate[static_cast<std::size_t>(v)] > v)
      out.push_back(Edge{v, mate[static_cast<std::size_t>(v)]});
  return Matching{std::move(out)};
}

inline bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2) return false;
  return maximum_matching(g).size() * 2 == g.order();
}

/// Visits every matching of size exactly k, each exactly once, in
/// lexicographic order of the sorted edge lists. The visitor returns false to
/// stop; the function returns false iff the visitor stopped it.
template <class Visit>
bool for_each_k_matching(const Graph& g, int k, Visit&& visit) {
  if (k < 1) throw std::invalid_argument("matching size must be at least 1");
  const std::vector<Edge> all = g.edges();
  std::vector<Edge> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == k) return visit(chosen);
    if (all.size() - start < static_cast<std::size_t>(k) - chosen.size()) return true;
    for (std::size_t i = start; i < all.size(); ++i) {
      const Edge e = all[i];
      const std::uint64_t m = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
      if (used & m) continue;
      chosen.push_back(e);
      used |= m;
      const bool keep_going = self(self, i + 1);
      chosen.pop_back();
      used &= ~m;
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

inline std::vector<Matching> k_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  for_each_k_matching(g, k, [&](const std::vector<Edge>& edges) {
    out.push_back(Matching{edges});
    return true;
  });
  return out;
}

/// True iff g - V(m) has a perfect matching, i.e. m extends to a perfect
/// matching of g.
inline bool extends_to_perfect(const Graph& g, const Matching& m) {
  if (!is_matching_of(g, m))
    throw std::invalid_argument("not a matching of this graph");
  const VertexSet rest = g.vertices() - m.covered();
  if (rest.empty()) return true;
  if (rest.count() % 2) return false;
  return has_perfect_matching(induced_subgraph(g, rest).graph);
}

inline int max_matching_size_in(const Graph& g, VertexSet x) {
  if (x.empty()) throw std::invalid_argument("vertex set must be nonempty");
  return maximum_matching(induced_subgraph(g, x).graph).size();
}

}  // namespace extendlab

#endif  // EXTENDLAB_MATCHING_HPP
