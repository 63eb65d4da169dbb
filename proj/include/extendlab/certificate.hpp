#ifndef EXTENDLAB_CERTIFICATE_HPP
#define EXTENDLAB_CERTIFICATE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "extendlab/extendability.hpp"
#include "extendlab/graph.hpp"
#include "extendlab/matching.hpp"

namespace extendlab {

// Per-edge criticality certificate: for edge e = uv and parameter k, a vertex
// set S disjoint from {u, v} such that
//   (matching-size)        g[S] contains a k-matching,
//   (odd-component-count)  g - e - S has exactly |S| - 2k + 2 odd components,
//   (endpoint-components)  u and v lie in two distinct odd components.
// An edge has such a certificate exactly when it is critical for
// k-extendability; all edges certified is equivalent to minimality.
struct Certificate {
  Edge edge;
  int k = 0;
  VertexSet s;
  int matching_size = 0;
  ComponentSplit split;  // components of g - e - s
  int u_component = -1;
  int v_component = -1;
};

struct CertificateCheck {
  bool valid = false;
  std::string first_failed;  // empty when valid
  std::optional<Certificate> certificate;
};

namespace detail {

inline int component_index_of(const ComponentSplit& split, int v) {
  for (std::size_t i = 0; i < split.components.size(); ++i)
    if (split.components[i].contains(v)) return static_cast<int>(i);
  return -1;
}

inline CertificateCheck evaluate_certificate(const Graph& g, Edge e, int k, VertexSet s) {
  const int msize = s.empty() ? 0 : max_matching_size_in(g, s);
  if (msize < k) return {false, "matching-size", std::nullopt};
  ComponentSplit split = component_split(g, s, e);
  if (split.odd_count != s.count() - 2 * k + 2)
    return {false, "odd-component-count", std::nullopt};
  const int uc = component_index_of(split, e.u);
  const int vc = component_index_of(split, e.v);
  if (uc == vc || split.components[static_cast<std::size_t>(uc)].count() % 2 == 0 ||
      split.components[static_cast<std::size_t>(vc)].count() % 2 == 0)
    return {false, "endpoint-components", std::nullopt};
  Certificate cert{e, k, s, msize, std::move(split), uc, vc};
  return {true, "", std::move(cert)};
}

inline void require_edge(const Graph& g, Edge e) {
  if (e.u >= e.v || e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw std::invalid_argument("edge not present in graph");
}

}  // namespace detail

inline CertificateCheck validate_certificate(const Graph& g, Edge e, int k, VertexSet s) {
  detail::require_edge(g, e);
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (s.bits & ~g.vertices().bits)
    throw std::invalid_argument("certificate set out of vertex range");
  if (s.contains(e.u) || s.contains(e.v))
    throw std::invalid_argument("certificate set overlaps the edge endpoints");
  return detail::evaluate_certificate(g, e, k, s);
}

/// Smallest valid certificate set for the edge, lexicographically first among
/// sets of that size. The subset search starts at size 2k, since a k-matching
/// inside S needs 2k vertices.
inline std::optional<Certificate> find_certificate(const Graph& g, Edge e, int k) {
  detail::require_edge(g, e);
  if (k < 1 || k > g.order() / 2 - 1) throw std::invalid_argument("k out of range");
  const std::vector<int> pool =
      (g.vertices() - VertexSet::of({e.u, e.v})).to_vector();
  for (int size = 2 * k; size <= static_cast<int>(pool.size()); ++size) {
    std::optional<Certificate> found;
    detail::for_each_subset(pool, size, [&](VertexSet s) {
      CertificateCheck check = detail::evaluate_certificate(g, e, k, s);
      if (check.valid) {
        found = std::move(check.certificate);
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

struct EdgeCertification {
  Edge edge;
  std::optional<Certificate> certificate;
};

struct CertificationResult {
  int k = 0;
  std::vector<EdgeCertification> edges;  // ascending edge order

  bool all_certified() const {
    for (const EdgeCertification& ec : edges)
      if (!ec.certificate) return false;
    return true;
  }
};

inline CertificationResult certify_all_edges(const Graph& g, int k) {
  if (!is_k_extendable(g, k).result)
    throw std::invalid_argument("certification requires a k-extendable graph");
  CertificationResult out;
  out.k = k;
  for (Edge e : g.edges()) out.edges.push_back({e, find_certificate(g, e, k)});
  return out;
}

enum class EdgeType { type1, type2, unclassified };

inline const char* edge_type_name(EdgeType t) {
  switch (t) {
    case EdgeType::type1: return "type1";
    case EdgeType::type2: return "type2";
    default: return "unclassified";
  }
}

/// Structural profile of a certificate, defined for k = 2 only:
///  - type1: |S| = 4, two odd components, both endpoint components nontrivial;
///  - type2: |S| = 5, three odd components, both endpoint components trivial,
///    no even component;
///  - unclassified otherwise (the classifier stays total).
/// twin_flag records whether the endpoints have identical neighborhoods away
/// from each other.
struct EdgeProfile {
  Edge edge;
  int s_size = 0;
  int odd_count = 0;
  std::vector<int> odd_orders;  // ascending
  int even_count = 0;
  EdgeType type_tag = EdgeType::unclassified;
  bool twin_flag = false;
};

inline EdgeProfile profile_edge(const Graph& g, const Certificate& c) {
  if (c.k != 2) throw std::invalid_argument("edge typing is defined for k = 2 only");
  EdgeProfile p;
  p.edge = c.edge;
  p.s_size = c.s.count();
  p.odd_count = c.split.odd_count;
  p.even_count = c.split.even_count;
  for (const VertexSet& comp : c.split.components)
    if (comp.count() % 2) p.odd_orders.push_back(comp.count());
  std::sort(p.odd_orders.begin(), p.odd_orders.end());
  const int u_order = c.split.components[static_cast<std::size_t>(c.u_component)].count();
  const int v_order = c.split.components[static_cast<std::size_t>(c.v_component)].count();
  if (p.s_size == 4 && p.odd_count == 2 && u_order > 1 && v_order > 1)
    p.type_tag = EdgeType::type1;
  else if (p.s_size == 5 && p.odd_count == 3 && u_order == 1 && v_order == 1 &&
           p.even_count == 0)
    p.type_tag = EdgeType::type2;
  const VertexSet u_rest = g.neighbors(c.edge.u) - VertexSet::of({c.edge.v});
  const VertexSet v_rest = g.neighbors(c.edge.v) - VertexSet::of({c.edge.u});
  p.twin_flag = u_rest == v_rest;
  return p;
}

struct PropertyPCheck {
  bool holds = false;
  std::string first_failed;  // empty when the property holds
};

/// Five-vertex cut condition isolating `u` from `v`: |x| = 5 with a 2-matching
/// inside, v in x, u in an odd component C of g - x, and uv the only edge from
/// C to v. The (u, v) orientation is the caller's; u must avoid x.
inline PropertyPCheck check_property_P(const Graph& g, int u, int v, VertexSet x) {
  detail::require_edge(g, make_edge(u, v));
  if (x.bits & ~g.vertices().bits)
    throw std::invalid_argument("cut set out of vertex range");
  if (x.contains(u)) throw std::invalid_argument("isolated endpoint must avoid the cut");
  if (x.count() != 5 || max_matching_size_in(g, x) != 2) return {false, "cut-shape"};
  if (!x.contains(v)) return {false, "other-endpoint-in-cut"};
  const VertexSet cu = detail::reach_from(g, u, x, std::nullopt);
  if (cu.count() % 2 == 0) return {false, "endpoint-odd-component"};
  if (!((g.neighbors(v) & cu) == VertexSet::of({u}))) return {false, "private-edge"};
  return {true, ""};
}

}  // namespace extendlab

#endif  // EXTENDLAB_CERTIFICATE_HPP
