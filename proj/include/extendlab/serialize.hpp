#ifndef EXTENDLAB_SERIALIZE_HPP
#define EXTENDLAB_SERIALIZE_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "extendlab/certificate.hpp"
#include "extendlab/extendability.hpp"
#include "extendlab/graph.hpp"
#include "extendlab/matching.hpp"
#include "extendlab/search.hpp"

// Machine-readable output. Field order is fixed (ordered_json preserves
// insertion order) so identical inputs produce byte-identical documents.

namespace extendlab {

using ojson = nlohmann::ordered_json;

inline ojson to_json(VertexSet s) {
  ojson arr = ojson::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

inline ojson to_json(Edge e) { return ojson::array({e.u, e.v}); }

inline ojson to_json(const Matching& m) {
  ojson arr = ojson::array();
  for (Edge e : m.edges) arr.push_back(to_json(e));
  return arr;
}

inline ojson verdict_json(const std::string& g6, const Graph& g,
                          const ExtendabilityVerdict& verdict,
                          const std::optional<MinimalityVerdict>& minimality) {
  ojson out;
  out["graph6"] = g6;
  out["n"] = g.order();
  out["k"] = verdict.k;
  out["min_degree"] = min_degree(g);
  out["extendable"] = verdict.result;
  if (!verdict.result && verdict.witness) {
    ojson w;
    w["matching"] = to_json(verdict.witness->matching);
    w["odd_component"] = verdict.witness->odd_component
                             ? to_json(*verdict.witness->odd_component)
                             : ojson(nullptr);
    out["witness"] = std::move(w);
  }
  if (minimality) {
    out["minimal"] = minimality->result;
    if (!minimality->result && minimality->non_critical_edge)
      out["non_critical_edge"] = to_json(*minimality->non_critical_edge);
  }
  return out;
}

inline ojson certificate_json(const Graph& g, const Certificate& c) {
  ojson out;
  out["edge"] = to_json(c.edge);
  out["s"] = to_json(c.s);
  out["matching_size"] = c.matching_size;
  ojson odd = ojson::array();
  for (const VertexSet& comp : c.split.components)
    if (comp.count() % 2) odd.push_back(to_json(comp));
  out["odd_components"] = std::move(odd);
  if (c.k == 2) out["type"] = edge_type_name(profile_edge(g, c).type_tag);
  return out;
}

inline ojson certification_json(const std::string& g6, const Graph& g,
                                const CertificationResult& result) {
  ojson out;
  out["graph6"] = g6;
  out["n"] = g.order();
  out["k"] = result.k;
  out["extendable"] = true;
  out["minimal"] = result.all_certified();
  ojson edges = ojson::array();
  for (const EdgeCertification& ec : result.edges) {
    if (ec.certificate) {
      ojson entry = certificate_json(g, *ec.certificate);
      entry["certified"] = true;
      edges.push_back(std::move(entry));
    } else {
      ojson entry;
      entry["edge"] = to_json(ec.edge);
      entry["certified"] = false;
      edges.push_back(std::move(entry));
    }
  }
  out["edges"] = std::move(edges);
  return out;
}

inline ojson report_json(const SearchReport& r) {
  ojson out;
  out["input_count"] = r.input_count;
  out["survivor_count"] = r.survivor_count;
  ojson hist = ojson::object();
  for (const auto& [degree, count] : r.min_degree_histogram)
    hist[std::to_string(degree)] = count;
  out["min_degree_histogram"] = std::move(hist);
  ojson ex = ojson::object();
  for (const auto& [degree, strings] : r.exemplars) ex[std::to_string(degree)] = strings;
  out["exemplars"] = std::move(ex);
  ojson violations = ojson::array();
  for (const Violation& v : r.violations) {
    ojson entry;
    entry["graph6"] = v.graph6;
    entry["check"] = v.check;
    violations.push_back(std::move(entry));
  }
  out["violations"] = std::move(violations);
  if (r.expected_degrees)
    out["expected_degrees"] =
        ojson::array({r.expected_degrees->first, r.expected_degrees->second});
  if (r.degrees_within_expected)
    out["degrees_within_expected"] = *r.degrees_within_expected;
  return out;
}

inline std::string report_tsv(const SearchReport& r) {
  std::string out;
  for (const auto& [degree, count] : r.min_degree_histogram) {
    out += std::to_string(degree);
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

}  // namespace extendlab

#endif  // EXTENDLAB_SERIALIZE_HPP
