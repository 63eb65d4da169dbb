#ifndef EXTENDLAB_EXTENDABILITY_HPP
#define EXTENDLAB_EXTENDABILITY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "extendlab/graph.hpp"
#include "extendlab/matching.hpp"

namespace extendlab {

/// Evidence that a graph is not k-extendable: either a matching of size <= k
/// whose removal strands an odd component, or a k-matching that fails to
/// extend (odd_component empty), or the empty matching when the graph has no
/// perfect matching at all.
struct Witness {
  Matching matching;
  std::optional<VertexSet> odd_component;
};

struct ExtendabilityVerdict {
  int k = 0;
  bool result = false;
  std::optional<Witness> witness;
};

struct MinimalityVerdict {
  int k = 0;
  bool result = false;
  std::optional<Edge> non_critical_edge;
};

namespace detail {

inline std::optional<VertexSet> first_odd_component(const Graph& g, VertexSet removed) {
  for (const VertexSet& comp : component_split(g, removed).components)
    if (comp.count() % 2) return comp;
  return std::nullopt;
}

}  // namespace detail

/// Scans matchings of size <= k whose removal strands an odd component.
/// Exhaustive for order <= 12; skipped above that.
inline std::optional<Witness> witness_from_small_matchings(const Graph& g, int k) {
  if (g.order() > 12) return std::nullopt;
  if (auto odd = detail::first_odd_component(g, VertexSet{}))
    return Witness{Matching{}, odd};
  const int cap = std::min(k, g.order() / 2 - 1);  // a spanning matching strands nothing
  for (int size = 1; size <= cap; ++size) {
    std::optional<Witness> found;
    for_each_k_matching(g, size, [&](const std::vector<Edge>& edges) {
      VertexSet removed;
      for (Edge e : edges) {
        removed.add(e.u);
        removed.add(e.v);
      }
      if (auto odd = detail::first_odd_component(g, removed)) {
        found = Witness{Matching{edges}, odd};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

/// Scans (2k-1)-vertex cuts X whose induced maximum matching has size k-1 and
/// whose single unmatched vertex reaches two components of g - X; converts a
/// hit into a stranded-odd-component witness. Exhaustive for order <= 10 and
/// k >= 2; skipped otherwise.
inline std::optional<Witness> witness_from_deficient_cuts(const Graph& g, int k) {
  if (k < 2 || g.order() > 10 || 2 * k - 1 > g.order() - 2) return std::nullopt;
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  std::optional<Witness> found;
  detail::for_each_subset(all, 2 * k - 1, [&](VertexSet x) {
    const ComponentSplit split = component_split(g, x);
    if (split.components.size() < 2) return true;
    const auto induced = induced_subgraph(g, x);
    const Matching inner = maximum_matching(induced.graph);
    if (inner.size() != k - 1) return true;
    VertexSet uncovered = x;
    std::vector<Edge> edges;
    for (Edge e : inner.edges) {
      const int a = induced.to_parent[static_cast<std::size_t>(e.u)];
      const int b = induced.to_parent[static_cast<std::size_t>(e.v)];
      edges.push_back(make_edge(a, b));
      uncovered.remove(a);
      uncovered.remove(b);
    }
    const int x0 = uncovered.min();
    const VertexSet reach = g.neighbors(x0);
    const VertexSet* h1 = nullptr;
    const VertexSet* h2 = nullptr;
    for (const VertexSet& comp : split.components) {
      if ((reach & comp).empty()) continue;
      if (!h1)
        h1 = &comp;
      else if (!h2) {
        h2 = &comp;
        break;
      }
    }
    if (!h2) return true;
    VertexSet stranded = *h1;
    if (h1->count() % 2) {
      edges.push_back(make_edge(x0, (reach & *h2).min()));
    } else {
      const int inside = (reach & *h1).min();
      edges.push_back(make_edge(x0, inside));
      stranded.remove(inside);
    }
    Matching candidate = make_matching(std::move(edges));
    // return only witnesses that re-validate
    if (!is_matching_of(g, candidate) || stranded.count() % 2 == 0) return true;
    bool is_component = false;
    for (const VertexSet& comp : component_split(g, candidate.covered()).components)
      if (comp == stranded) {
        is_component = true;
        break;
      }
    if (!is_component) return true;
    found = Witness{std::move(candidate), stranded};
    return false;
  });
  return found;
}

/// Sufficient-condition scan for non-k-extendability. A returned witness is
/// always valid; absence certifies nothing.
inline std::optional<Witness> witness_scan(const Graph& g, int k) {
  if (g.order() % 2) throw std::invalid_argument("witness scan requires even order");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (auto w = witness_from_small_matchings(g, k)) return w;
  return witness_from_deficient_cuts(g, k);
}

/// Decides whether every k-matching of g extends to a perfect matching.
/// A connected even-order graph without a perfect matching reports false with
/// the empty matching as witness. On failure the witness is either the scan's
/// stranded-odd-component form or the lexicographically first k-matching that
/// fails to extend.
inline ExtendabilityVerdict is_k_extendable(const Graph& g, int k) {
  if (g.order() % 2) throw std::invalid_argument("k-extendability requires even order");
  if (!is_connected(g))
    throw std::invalid_argument("k-extendability requires a connected graph");
  if (k < 1 || k > g.order() / 2 - 1) throw std::invalid_argument("k out of range");
  if (!has_perfect_matching(g))
    return {k, false, Witness{Matching{}, std::nullopt}};
  if (auto w = witness_scan(g, k)) return {k, false, std::move(w)};
  std::optional<Witness> failing;
  for_each_k_matching(g, k, [&](const std::vector<Edge>& edges) {
    Matching m{edges};
    if (!extends_to_perfect(g, m)) {
      failing = Witness{std::move(m), std::nullopt};
      return false;
    }
    return true;
  });
  if (failing) return {k, false, std::move(failing)};
  return {k, true, std::nullopt};
}

namespace detail {

inline MinimalityVerdict minimality_given_extendable(const Graph& g, int k) {
  for (Edge e : g.edges()) {
    const Graph h = g.with_edge_removed(e);
    if (!is_connected(h)) continue;  // disconnecting deletion destroys k-extendability
    if (is_k_extendable(h, k).result) return {k, false, e};
  }
  return {k, true, std::nullopt};
}

}  // namespace detail

/// True iff deleting any single edge destroys k-extendability. Deletions that
/// disconnect the graph count as destroying it.
inline MinimalityVerdict is_minimal_k_extendable(const Graph& g, int k) {
  if (!is_k_extendable(g, k).result)
    throw std::invalid_argument("minimality requires a k-extendable graph");
  return detail::minimality_given_extendable(g, k);
}

enum class CheckStatus { pass, fail, not_applicable };

/// One classic implication per field, each evaluated only when its hypotheses
/// hold on g:
///  - downward_and_connected: k-extendable implies (k-1)-extendable and
///    (k+1)-connected (0-extendable meaning: has a perfect matching);
///  - minimal_degree_window: minimal k-extendable implies
///    k+1 <= min degree <= order/2, or min degree >= 2k+1;
///  - claw_free_degree_bound: k-extendable and claw-free implies
///    min degree >= 2k;
///  - cut_matching_bound: for every vertex cut X whose induced subgraph has a
///    perfect matching M, |M| >= k; and when |M| = k every component of g - X
///    is even and every vertex of X has a neighbor in each component.
///    Exhaustive over subsets, evaluated for order <= 10 only.
struct PropertyReport {
  CheckStatus downward_and_connected = CheckStatus::not_applicable;
  CheckStatus minimal_degree_window = CheckStatus::not_applicable;
  CheckStatus claw_free_degree_bound = CheckStatus::not_applicable;
  CheckStatus cut_matching_bound = CheckStatus::not_applicable;

  bool all_pass() const {
    return downward_and_connected != CheckStatus::fail &&
           minimal_degree_window != CheckStatus::fail &&
           claw_free_degree_bound != CheckStatus::fail &&
           cut_matching_bound != CheckStatus::fail;
  }
  std::vector<std::string> failed_checks() const {
    std::vector<std::string> out;
    if (downward_and_connected == CheckStatus::fail)
      out.push_back("downward-extendability-and-connectivity");
    if (minimal_degree_window == CheckStatus::fail) out.push_back("minimal-degree-window");
    if (claw_free_degree_bound == CheckStatus::fail) out.push_back("claw-free-degree-bound");
    if (cut_matching_bound == CheckStatus::fail) out.push_back("cut-matching-bound");
    return out;
  }
};

inline PropertyReport property_suite(const Graph& g, int k) {
  if (g.order() % 2) throw std::invalid_argument("property suite requires even order");
  if (!is_connected(g))
    throw std::invalid_argument("property suite requires a connected graph");
  if (k < 1 || k > g.order() / 2 - 1) throw std::invalid_argument("k out of range");
  PropertyReport report;
  if (!is_k_extendable(g, k).result) return report;

  const bool downward =
      k == 1 ? has_perfect_matching(g) : is_k_extendable(g, k - 1).result;
  report.downward_and_connected =
      downward && is_l_connected(g, k + 1) ? CheckStatus::pass : CheckStatus::fail;

  const int degree = min_degree(g);
  if (is_claw_free(g))
    report.claw_free_degree_bound = degree >= 2 * k ? CheckStatus::pass : CheckStatus::fail;

  if (detail::minimality_given_extendable(g, k).result) {
    const int half = g.order() / 2;
    const bool in_window = (k + 1 <= degree && degree <= half) || degree >= 2 * k + 1;
    report.minimal_degree_window = in_window ? CheckStatus::pass : CheckStatus::fail;
  }

  if (g.order() <= 10) {
    report.cut_matching_bound = CheckStatus::pass;
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    for (int size = 2; size <= g.order() - 2 &&
                       report.cut_matching_bound == CheckStatus::pass;
         size += 2) {
      detail::for_each_subset(all, size, [&](VertexSet x) {
        const ComponentSplit split = component_split(g, x);
        if (split.components.size() < 2) return true;  // not a cut
        if (max_matching_size_in(g, x) * 2 != x.count()) return true;  // no perfect matching in g[X]
        if (size / 2 < k) {
          report.cut_matching_bound = CheckStatus::fail;
          return false;
        }
        if (size / 2 == k) {
          for (const VertexSet& comp : split.components)
            if (comp.count() % 2) {
              report.cut_matching_bound = CheckStatus::fail;
              return false;
            }
          for (int v : x)
            for (const VertexSet& comp : split.components)
              if ((g.neighbors(v) & comp).empty()) {
                report.cut_matching_bound = CheckStatus::fail;
                return false;
              }
        }
        return true;
      });
    }
  }
  return report;
}

}  // namespace extendlab

#endif  // EXTENDLAB_EXTENDABILITY_HPP
