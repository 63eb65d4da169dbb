// Acceptance suite: end-to-end reproduction of the toolkit's headline claims
// at desk scale. Each criterion prints one [PASS]/[FAIL] line; the process
// exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "extendlab/certificate.hpp"
#include "extendlab/extendability.hpp"
#include "extendlab/graph.hpp"
#include "extendlab/graph6.hpp"
#include "extendlab/matching.hpp"
#include "extendlab/oracle.hpp"
#include "extendlab/search.hpp"
#include "extendlab/serialize.hpp"

using namespace extendlab;

namespace {

int failures = 0;
constexpr int kJobs = 4;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " — " << detail << "\n";
  if (!ok) ++failures;
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return build_graph(a + b, edges);
}

Graph octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!(j == i + 1 && i % 2 == 0)) edges.emplace_back(i, j);
  return build_graph(6, edges);
}

Graph random_graph(std::mt19937& rng, int n, unsigned num, unsigned den) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % den < num) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

bool minimal_by_oracle(const Graph& g, int k) {
  for (Edge e : g.edges()) {
    const Graph h = g.with_edge_removed(e);
    if (oracle::is_connected(h) && oracle::k_extendable(h, k)) return false;
  }
  return true;
}

FilterSpec claw_free_minimal_spec() {
  FilterSpec spec;
  spec.require(FilterSpec::Predicate::connected)
      .require(FilterSpec::Predicate::claw_free)
      .require(FilterSpec::Predicate::k_extendable)
      .require(FilterSpec::Predicate::minimal);
  return spec;
}

bool histogram_within(const SearchReport& r, int lo, int hi) {
  for (const auto& [degree, count] : r.min_degree_histogram)
    if (degree < lo || degree > hi) return false;
  return true;
}

void criterion_order6(const std::vector<Graph>& order6) {
  const auto start = std::chrono::steady_clock::now();
  const oracle::ClassCounts oracle_counts = oracle::count_classes_by_orbit(6);
  std::size_t connected_count = 0;
  for (const Graph& g : order6) connected_count += is_connected(g) ? 1 : 0;
  const SearchReport report6 = run_pipeline(order6, claw_free_minimal_spec(), 2, kJobs);
  const bool degrees_ok = histogram_within(report6, 4, 5);
  bool k6_found = false;
  for (const std::string& g6 : report6.survivors)
    k6_found = k6_found || g6 == emit_graph6(complete(6));
  const bool k6_degree = report6.min_degree_histogram.count(5) &&
                         report6.exemplars.count(5) &&
                         std::count(report6.exemplars.at(5).begin(),
                                    report6.exemplars.at(5).end(),
                                    emit_graph6(complete(6))) > 0;
  // dual route: rebuild the survivor set from oracle primitives alone
  std::vector<std::string> by_oracle;
  for (const Graph& g : order6) {
    if (g.order() % 2 || !oracle::is_connected(g) || !is_claw_free(g)) continue;
    if (!oracle::k_extendable(g, 2) || !minimal_by_oracle(g, 2)) continue;
    by_oracle.push_back(emit_graph6(g));
  }
  const bool routes_agree = by_oracle == report6.survivors;
  const double elapsed = seconds_since(start);
  report("order-6 exhaustive minimum-degree survey",
         connected_count == oracle_counts.connected && degrees_ok && k6_found &&
             k6_degree && routes_agree && report6.violations.empty() && elapsed < 10.0,
         "connected=" + std::to_string(connected_count) + " (oracle " +
             std::to_string(oracle_counts.connected) + "), survivors=" +
             std::to_string(report6.survivor_count) + ", degrees in {4,5}=" +
             (degrees_ok ? "yes" : "no") + ", K6 at degree 5=" +
             (k6_found && k6_degree ? "yes" : "no") + ", oracle route agrees=" +
             (routes_agree ? "yes" : "no") + ", " + std::to_string(elapsed) + "s");
}

void criterion_order8(const std::vector<Graph>& order8) {
  const auto start = std::chrono::steady_clock::now();
  const SearchReport report8 = run_pipeline(order8, claw_free_minimal_spec(), 2, kJobs);
  const bool degrees_ok = histogram_within(report8, 4, 5);
  bool survivors_ok = true;  // every survivor re-validates through the oracle
  for (const std::string& g6 : report8.survivors) {
    const Graph g = parse_graph6(g6);
    survivors_ok = survivors_ok && is_claw_free(g) && oracle::k_extendable(g, 2) &&
                   minimal_by_oracle(g, 2);
  }
  report("order-8 exhaustive minimum-degree survey",
         degrees_ok && survivors_ok && report8.violations.empty(),
         "survivors=" + std::to_string(report8.survivor_count) +
             ", degrees in {4,5}=" + (degrees_ok ? "yes" : "no") +
             ", oracle re-validation=" + (survivors_ok ? "yes" : "no") +
             ", violations=" + std::to_string(report8.violations.size()) + ", " +
             std::to_string(seconds_since(start)) + "s");
}

void criterion_characterization(const std::vector<Graph>& order6) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0, mismatches = 0;
  for (const Graph& g : order6) {
    if (g.order() % 2 || !is_connected(g)) continue;
    if (!is_k_extendable(g, 2).result) continue;
    ++checked;
    const bool minimal = is_minimal_k_extendable(g, 2).result;
    const bool certified = certify_all_edges(g, 2).all_certified();
    if (minimal != certified) ++mismatches;
  }
  std::mt19937 rng(424242);
  std::size_t sampled = 0;
  std::size_t attempts = 0;
  while (sampled < 500 && attempts < 500000) {
    ++attempts;
    const Graph g = random_graph(rng, 8, 11, 20);
    if (!is_connected(g) || !is_k_extendable(g, 2).result) continue;
    ++sampled;
    const bool minimal = is_minimal_k_extendable(g, 2).result;
    const bool certified = certify_all_edges(g, 2).all_certified();
    if (minimal != certified) ++mismatches;
  }
  report("minimality matches all-edges-certified",
         mismatches == 0 && sampled == 500 && checked > 0,
         std::to_string(checked) + " order-6 graphs + " + std::to_string(sampled) +
             " random order-8 graphs, mismatches=" + std::to_string(mismatches) +
             ", " + std::to_string(seconds_since(start)) + "s");
}

void criterion_oracle_equivalence(const std::vector<Graph>& order8) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t matching_checked = 0, matching_bad = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      ++matching_checked;
      if (maximum_matching(g).size() != oracle::max_matching_size(g)) ++matching_bad;
    }
  for (const Graph& g : order8) {
    ++matching_checked;
    if (maximum_matching(g).size() != oracle::max_matching_size(g)) ++matching_bad;
  }
  std::mt19937 rng(979797);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 1, 2);
    ++matching_checked;
    if (maximum_matching(g).size() != oracle::max_matching_size(g)) ++matching_bad;
  }
  std::size_t verdicts = 0, verdict_bad = 0;
  while (verdicts < 500) {
    const int n = 4 + 2 * static_cast<int>(rng() % 4);
    const Graph g = random_graph(rng, n, 1, 2);
    if (!is_connected(g)) continue;
    const int k = 1 + static_cast<int>(rng() % (n / 2 - 1));
    ++verdicts;
    if (is_k_extendable(g, k).result != oracle::k_extendable(g, k)) ++verdict_bad;
  }
  report("production results equal brute-force oracle",
         matching_bad == 0 && verdict_bad == 0,
         std::to_string(matching_checked) + " matching sizes (" +
             std::to_string(matching_bad) + " off), " + std::to_string(verdicts) +
             " extendability verdicts (" + std::to_string(verdict_bad) + " off), " +
             std::to_string(seconds_since(start)) + "s");
}

void criterion_property_suite(const std::vector<Graph>& order6,
                              const std::vector<Graph>& order8) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t violations = 0;
  std::string counts;
  for (int k = 1; k <= 2; ++k) {
    FilterSpec spec;
    spec.require(FilterSpec::Predicate::connected)
        .require(FilterSpec::Predicate::k_extendable);
    const SearchReport r6 = run_pipeline(order6, spec, k, kJobs);
    const SearchReport r8 = run_pipeline(order8, spec, k, kJobs);
    violations += r6.violations.size() + r8.violations.size();
    counts += "k=" + std::to_string(k) + ": " + std::to_string(r6.survivor_count) +
              "@6 + " + std::to_string(r8.survivor_count) + "@8, ";
  }
  report("classic-property suite over all k-extendable graphs",
         violations == 0 && !counts.empty(),
         counts + "violations=" + std::to_string(violations) + ", " +
             std::to_string(seconds_since(start)) + "s");
}

void criterion_fixtures() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  const Graph k6 = complete(6);
  ok = ok && oracle::k_extendable(k6, 2) && minimal_by_oracle(k6, 2);
  ok = ok && is_k_extendable(k6, 2).result && is_minimal_k_extendable(k6, 2).result;
  ok = ok && is_claw_free(k6) && min_degree(k6) == 5;

  const Graph k33 = complete_bipartite(3, 3);
  ok = ok && oracle::k_extendable(k33, 2) && minimal_by_oracle(k33, 2);
  ok = ok && is_k_extendable(k33, 2).result && is_minimal_k_extendable(k33, 2).result;
  ok = ok && !is_claw_free(k33) && min_degree(k33) == 3 && is_bipartite(k33);

  const Graph k44 = complete_bipartite(4, 4);
  ok = ok && oracle::k_extendable(k44, 2) && !minimal_by_oracle(k44, 2);
  ok = ok && is_k_extendable(k44, 2).result;
  const MinimalityVerdict k44_verdict = is_minimal_k_extendable(k44, 2);
  ok = ok && !k44_verdict.result && k44_verdict.non_critical_edge.has_value();
  if (k44_verdict.non_critical_edge) {
    const Graph pruned = k44.with_edge_removed(*k44_verdict.non_critical_edge);
    ok = ok && is_connected(pruned) && oracle::k_extendable(pruned, 2) &&
         is_k_extendable(pruned, 2).result;
  }

  const Graph octa = octahedron();
  ok = ok && !oracle::k_extendable(octa, 2);
  const ExtendabilityVerdict octa_verdict = is_k_extendable(octa, 2);
  ok = ok && !octa_verdict.result && octa_verdict.witness.has_value();
  if (octa_verdict.witness) {
    const Witness& w = *octa_verdict.witness;
    ok = ok && is_matching_of(octa, w.matching) && w.matching.size() <= 2;
    if (w.odd_component) {
      bool stranded = false;
      for (const VertexSet& comp : component_split(octa, w.matching.covered()).components)
        stranded = stranded || comp == *w.odd_component;
      ok = ok && stranded && w.odd_component->count() % 2 == 1;
    } else {
      ok = ok && !extends_to_perfect(octa, w.matching);
    }
  }

  const Graph c6 = cycle(6);
  ok = ok && oracle::k_extendable(c6, 1) && minimal_by_oracle(c6, 1);
  ok = ok && is_k_extendable(c6, 1).result && is_minimal_k_extendable(c6, 1).result;
  ok = ok && min_degree(c6) == 2;

  report("fixture graphs behave as documented", ok,
         "K6, K33, K44, octahedron, C6 cross-checked against the oracle, " +
             std::to_string(seconds_since(start)) + "s");
}

void criterion_conjecture_probe() {
  const auto start = std::chrono::steady_clock::now();
  const SearchReport scan = conjecture_scan(8, 3, kJobs);
  const bool within = scan.degrees_within_expected.value_or(false);
  bool k8_found = false;
  bool survivors_ok = true;
  for (const std::string& g6 : scan.survivors) {
    const Graph g = parse_graph6(g6);
    k8_found = k8_found || g6 == emit_graph6(complete(8));
    survivors_ok = survivors_ok && is_claw_free(g) && oracle::k_extendable(g, 3) &&
                   minimal_by_oracle(g, 3);
  }
  const bool k8_degree = scan.min_degree_histogram.count(7) > 0;
  const double elapsed = seconds_since(start);
  report("order-8 degree survey for k=3",
         within && k8_found && k8_degree && survivors_ok && scan.violations.empty() &&
             elapsed < 60.0,
         "survivors=" + std::to_string(scan.survivor_count) + ", degrees within {6,7}=" +
             (within ? "yes" : "no") + ", K8 at degree 7=" +
             (k8_found && k8_degree ? "yes" : "no") + ", oracle re-validation=" +
             (survivors_ok ? "yes" : "no") + ", " + std::to_string(elapsed) + "s");
}

std::string run_search_cli(int jobs) {
  const std::string command = std::string(EXTENDLAB_BIN) +
                              " search --n 6 --k 2 --claw-free --minimal --jobs " +
                              std::to_string(jobs) + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  pclose(pipe);
  return out;
}

void criterion_determinism() {
  const auto start = std::chrono::steady_clock::now();
  const std::string one = run_search_cli(1);
  const std::string four = run_search_cli(4);
  const std::string sixteen = run_search_cli(16);
  report("search reports byte-identical across --jobs {1,4,16}",
         !one.empty() && one == four && one == sixteen,
         std::to_string(one.size()) + " bytes compared, " +
             std::to_string(seconds_since(start)) + "s");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::cout << "building shared graph sets...\n";
  const std::vector<Graph> order6 = enumerate_graphs(6);
  const std::vector<Graph> order8 = enumerate_graphs(8);
  std::cout << "order 6: " << order6.size() << " classes, order 8: " << order8.size()
            << " classes, " << seconds_since(start) << "s\n";

  criterion_order6(order6);
  criterion_order8(order8);
  criterion_characterization(order6);
  criterion_oracle_equivalence(order8);
  criterion_property_suite(order6, order8);
  criterion_fixtures();
  criterion_conjecture_probe();
  criterion_determinism();

  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << " ("
            << seconds_since(start) << "s total)\n";
  return failures == 0 ? 0 : 1;
}
