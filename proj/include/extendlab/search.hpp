#ifndef EXTENDLAB_SEARCH_HPP
#define EXTENDLAB_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "extendlab/extendability.hpp"
#include "extendlab/graph.hpp"
#include "extendlab/graph6.hpp"
#include "extendlab/matching.hpp"
#include "extendlab/parallel.hpp"

namespace extendlab {

namespace detail {

// Equitable vertex coloring: start from degrees, then repeatedly split classes
// by the multiset of neighbor classes until stable. Class ids are ranked by
// signature, so the coloring is isomorphism-invariant.
inline std::vector<int> equitable_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = 0;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{color[static_cast<std::size_t>(v)]};
      for (int w : g.neighbors(v)) sig.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(sig.begin() + 1, sig.end());
      sigs[static_cast<std::size_t>(v)] = {std::move(sig), v};
    }
    std::vector<std::pair<std::vector<int>, int>> order = sigs;
    std::sort(order.begin(), order.end());
    int next = -1;
    std::vector<int> fresh(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || order[i].first != order[i - 1].first) ++next;
      fresh[static_cast<std::size_t>(order[i].second)] = next;
    }
    color = std::move(fresh);
    if (next + 1 == classes) break;
    classes = next + 1;
  }
  return color;
}

constexpr std::uint64_t pair_bit(int t) { return std::uint64_t{1} << (63 - t); }
constexpr std::uint64_t prefix_mask(int t) {
  return t == 0 ? 0 : ~std::uint64_t{0} << (64 - t);
}

// Canonical labeling: exhaustive permutation minimization of the packed
// upper-triangle adjacency bit-string, restricted to permutations that respect
// the equitable coloring, with prefix pruning against the best string found.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    if (n_ > 11)
      throw std::invalid_argument("canonical form supports up to 11 vertices");
    const std::vector<int> color = equitable_colors(g);
    const int classes = *std::max_element(color.begin(), color.end()) + 1;
    cells_.resize(static_cast<std::size_t>(classes));
    for (int v = 0; v < n_; ++v) cells_[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
    for (int c = 0; c < classes; ++c)
      for (std::size_t i = 0; i < cells_[static_cast<std::size_t>(c)].size(); ++i)
        cell_of_pos_.push_back(c);
    perm_.resize(static_cast<std::size_t>(n_));
    dfs(0, 0);
  }

  std::uint64_t key() const { return best_; }
  const std::vector<int>& labeling() const { return best_perm_; }  // position -> vertex

 private:
  void dfs(int p, std::uint64_t cur) {
    if (p == n_) {
      if (!have_ || cur < best_) {
        best_ = cur;
        best_perm_ = perm_;
      }
      have_ = true;
      return;
    }
    const int base = p * (p - 1) / 2;
    for (int w : cells_[static_cast<std::size_t>(cell_of_pos_[static_cast<std::size_t>(p)])]) {
      if (used_ & (std::uint64_t{1} << w)) continue;
      std::uint64_t next = cur;
      for (int q = 0; q < p; ++q)
        if (g_.adjacent(w, perm_[static_cast<std::size_t>(q)])) next |= pair_bit(base + q);
      if (have_) {
        const std::uint64_t m = prefix_mask(base + p);
        if ((next & m) > (best_ & m)) continue;
      }
      perm_[static_cast<std::size_t>(p)] = w;
      used_ |= std::uint64_t{1} << w;
      dfs(p + 1, next);
      used_ &= ~(std::uint64_t{1} << w);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_pos_;
  std::vector<int> perm_;
  std::uint64_t used_ = 0;
  std::uint64_t best_ = ~std::uint64_t{0};
  std::vector<int> best_perm_;
  bool have_ = false;
};

}  // namespace detail

/// Isomorphism-invariant 64-bit key (packed canonical adjacency bit-string).
/// The order is not encoded; compare keys only among graphs of equal order.
inline std::uint64_t canonical_key(const Graph& g) {
  return detail::Canonicalizer(g).key();
}

inline Graph canonical_form(const Graph& g) {
  const detail::Canonicalizer canon(g);
  const std::vector<int>& lab = canon.labeling();
  const int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)])) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  return Graph::from_adjacency_rows(std::move(rows));
}

/// Exactly one representative per isomorphism class of simple graphs on n
/// vertices, in ascending canonical-key order. Built by extending each
/// (n-1)-vertex representative with every neighborhood of a new vertex and
/// deduplicating canonically. Desk scale: n <= 10 (8 and up take a while).
inline std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("built-in enumeration supports 1..10 vertices");
  std::vector<Graph> reps{build_graph(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const Graph& parent : reps) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
        for (int v = 0; v < m - 1; ++v) rows[static_cast<std::size_t>(v)] = parent.neighbors(v).bits;
        rows[static_cast<std::size_t>(m - 1)] = nb;
        for (int v : VertexSet(nb)) rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (m - 1);
        const Graph child = Graph::from_adjacency_rows(std::move(rows));
        const detail::Canonicalizer canon(child);
        if (seen.insert(canon.key()).second)
          next.emplace_back(canon.key(), canonical_form(child));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    reps.clear();
    reps.reserve(next.size());
    for (auto& [key, graph] : next) reps.push_back(std::move(graph));
  }
  return reps;
}

enum class ErrorPolicy { skip, abort };

struct IngestDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;  // input order; no isomorphism rejection
  std::vector<IngestDiagnostic> diagnostics;
};

/// Reads one graph6 line per graph. Blank lines are ignored. Malformed lines
/// are skipped with a diagnostic or abort the ingest, per policy.
inline IngestResult ingest_graph6(std::istream& in, ErrorPolicy policy) {
  IngestResult out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back(parse_graph6(line));
    } catch (const std::invalid_argument& e) {
      if (policy == ErrorPolicy::abort)
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
      out.diagnostics.push_back({line_no, e.what()});
    }
  }
  return out;
}

/// Conjunction of named predicates. Every predicate is total over Graph:
/// k-extendable and minimal simply fail on graphs outside their domain (odd
/// order, disconnected, k out of range). Cheap predicates are evaluated first
/// regardless of listed order; the result is order-independent.
struct FilterSpec {
  enum class Predicate {
    connected,
    even_order,
    has_perfect_matching,
    claw_free,
    k_extendable,
    minimal,
    min_degree_in,
  };
  struct Step {
    Predicate predicate;
    int lo = 0;
    int hi = 0;  // degree bounds, used by min_degree_in only
  };
  std::vector<Step> steps;

  FilterSpec& require(Predicate p) {
    steps.push_back({p, 0, 0});
    return *this;
  }
  FilterSpec& require_degree_range(int lo, int hi) {
    steps.push_back({Predicate::min_degree_in, lo, hi});
    return *this;
  }

  bool passes(const Graph& g, int k) const {
    bool want_connected = false, want_even = false, want_pm = false;
    bool want_claw_free = false, want_kext = false, want_minimal = false;
    int lo = 0, hi = kMaxOrder;
    bool want_degree = false;
    for (const Step& s : steps) switch (s.predicate) {
        case Predicate::connected: want_connected = true; break;
        case Predicate::even_order: want_even = true; break;
        case Predicate::has_perfect_matching: want_pm = true; break;
        case Predicate::claw_free: want_claw_free = true; break;
        case Predicate::k_extendable: want_kext = true; break;
        case Predicate::minimal: want_minimal = true; break;
        case Predicate::min_degree_in:
          want_degree = true;
          lo = std::max(lo, s.lo);
          hi = std::min(hi, s.hi);
          break;
      }
    if (want_degree) {
      const int d = min_degree(g);
      if (d < lo || d > hi) return false;
    }
    if (want_even && g.order() % 2) return false;
    if (want_connected && !is_connected(g)) return false;
    if (want_claw_free && !is_claw_free(g)) return false;
    if (want_pm && !has_perfect_matching(g)) return false;
    if (want_kext || want_minimal) {
      if (g.order() % 2 || k < 1 || k > g.order() / 2 - 1 || !is_connected(g))
        return false;
      if (!is_k_extendable(g, k).result) return false;
      if (want_minimal && !detail::minimality_given_extendable(g, k).result)
        return false;
    }
    return true;
  }
};

inline constexpr int kExemplarCap = 10;

struct Violation {
  std::string graph6;
  std::string check;
};

struct SearchReport {
  std::uint64_t input_count = 0;
  std::uint64_t survivor_count = 0;
  std::map<int, std::uint64_t> min_degree_histogram;
  std::map<int, std::vector<std::string>> exemplars;  // <= kExemplarCap smallest per degree
  std::vector<Violation> violations;
  std::vector<std::string> survivors;  // graph6 lines, input order
  std::optional<std::pair<int, int>> expected_degrees;
  std::optional<bool> degrees_within_expected;
};

/// Filters the stream and aggregates survivor statistics. Every survivor also
/// runs the property suite (when it is in the suite's domain); failures land
/// in `violations`. Results are byte-identical for any `jobs` value: per-graph
/// outcomes land in an indexed buffer and are folded in input order.
inline SearchReport run_pipeline(const std::vector<Graph>& graphs, const FilterSpec& spec,
                                 int k, int jobs = 1) {
  struct Outcome {
    bool survived = false;
    int degree = 0;
    std::string g6;
    std::vector<std::string> failed;
  };
  std::vector<Outcome> outcomes(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    Outcome& o = outcomes[i];
    if (!spec.passes(g, k)) return;
    o.survived = true;
    o.degree = min_degree(g);
    o.g6 = emit_graph6(g);
    if (g.order() % 2 == 0 && k >= 1 && k <= g.order() / 2 - 1 && is_connected(g))
      o.failed = property_suite(g, k).failed_checks();
  });
  SearchReport report;
  report.input_count = graphs.size();
  for (const Outcome& o : outcomes) {
    if (!o.survived) continue;
    ++report.survivor_count;
    ++report.min_degree_histogram[o.degree];
    std::vector<std::string>& ex = report.exemplars[o.degree];
    auto pos = std::lower_bound(ex.begin(), ex.end(), o.g6);
    if (pos != ex.end() || ex.size() < kExemplarCap) {
      ex.insert(pos, o.g6);
      if (ex.size() > kExemplarCap) ex.pop_back();
    }
    report.survivors.push_back(o.g6);
    for (const std::string& check : o.failed) report.violations.push_back({o.g6, check});
  }
  return report;
}

/// Degree survey of minimal k-extendable claw-free graphs on n vertices, with
/// the expected window {2k, 2k+1} recorded. The report states observed degrees
/// only; `degrees_within_expected` says whether they stay in the window.
inline SearchReport conjecture_scan(int n, int k, int jobs = 1) {
  if (n % 2) throw std::invalid_argument("scan requires even order");
  if (k < 1 || k > n / 2 - 1) throw std::invalid_argument("k out of range");
  FilterSpec spec;
  spec.require(FilterSpec::Predicate::connected)
      .require(FilterSpec::Predicate::claw_free)
      .require(FilterSpec::Predicate::k_extendable)
      .require(FilterSpec::Predicate::minimal);
  SearchReport report = run_pipeline(enumerate_graphs(n), spec, k, jobs);
  report.expected_degrees = {2 * k, 2 * k + 1};
  bool within = true;
  for (const auto& [degree, count] : report.min_degree_histogram)
    within = within && (degree == 2 * k || degree == 2 * k + 1);
  report.degrees_within_expected = within;
  return report;
}

}  // namespace extendlab

#endif  // EXTENDLAB_SEARCH_HPP
