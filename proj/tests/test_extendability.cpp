#include <random>

#include "doctest.h"

#include "extendlab/extendability.hpp"
#include "extendlab/oracle.hpp"
#include "test_helpers.hpp"

using namespace extendlab;
using namespace testutil;

namespace {

// A false verdict must carry self-contained evidence.
void check_witness(const Graph& g, int k, const ExtendabilityVerdict& verdict) {
  REQUIRE_FALSE(verdict.result);
  REQUIRE(verdict.witness.has_value());
  const Witness& w = *verdict.witness;
  CHECK(is_matching_of(g, w.matching));
  CHECK(w.matching.size() <= k);
  if (w.odd_component) {
    CHECK(w.odd_component->count() % 2 == 1);
    bool found = false;
    for (const VertexSet& comp : component_split(g, w.matching.covered()).components)
      found = found || comp == *w.odd_component;
    CHECK(found);
  } else if (w.matching.size() == 0) {
    CHECK_FALSE(has_perfect_matching(g));
  } else {
    CHECK(w.matching.size() == k);
    CHECK_FALSE(extends_to_perfect(g, w.matching));
  }
}

}  // namespace

TEST_CASE("k-extendability fixtures") {
  CHECK(is_k_extendable(complete(6), 2).result);
  CHECK(is_k_extendable(complete_bipartite(3, 3), 2).result);
  CHECK(is_k_extendable(cycle(6), 1).result);

  const ExtendabilityVerdict c6 = is_k_extendable(cycle(6), 2);
  CHECK_FALSE(c6.result);
  REQUIRE(c6.witness.has_value());
  CHECK(c6.witness->matching == make_matching({Edge{0, 1}, Edge{3, 4}}));
  REQUIRE(c6.witness->odd_component.has_value());
  CHECK(*c6.witness->odd_component == VertexSet::of({2}));
  check_witness(cycle(6), 2, c6);

  const ExtendabilityVerdict octa = is_k_extendable(octahedron(), 2);
  check_witness(octahedron(), 2, octa);
}

TEST_CASE("k-extendability domain errors and conventions") {
  CHECK_THROWS_AS(is_k_extendable(build_graph(6, {{0, 1}, {2, 3}, {4, 5}}), 1),
                  std::invalid_argument);  // disconnected
  CHECK_THROWS_AS(is_k_extendable(cycle(5), 1), std::invalid_argument);  // odd order
  CHECK_THROWS_AS(is_k_extendable(cycle(6), 0), std::invalid_argument);
  CHECK_THROWS_AS(is_k_extendable(cycle(6), 3), std::invalid_argument);
  CHECK_THROWS_AS(is_k_extendable(complete(4), 2), std::invalid_argument);

  // connected even order, no perfect matching: false with the empty witness
  const ExtendabilityVerdict no_pm = is_k_extendable(star(3), 1);
  CHECK_FALSE(no_pm.result);
  REQUIRE(no_pm.witness.has_value());
  CHECK(no_pm.witness->matching.size() == 0);
  CHECK_FALSE(no_pm.witness->odd_component.has_value());
}

TEST_CASE("pruned check matches the definition-literal oracle") {
  std::mt19937 rng(7301);
  int compared = 0;
  while (compared < 250) {
    const int n = 4 + 2 * static_cast<int>(rng() % 4);  // 4, 6, 8, 10
    const Graph g = random_connected_graph(rng, n);
    const int k = 1 + static_cast<int>(rng() % (n / 2 - 1));
    const ExtendabilityVerdict verdict = is_k_extendable(g, k);
    CHECK(verdict.result == oracle::k_extendable(g, k));
    if (!verdict.result) check_witness(g, k, verdict);
    ++compared;
  }
}

TEST_CASE("extendability is downward monotone") {
  std::mt19937 rng(7302);
  int found = 0;
  for (int trial = 0; trial < 400 && found < 25; ++trial) {
    const Graph g = random_connected_graph(rng, 8, 3, 5);
    const ExtendabilityVerdict v2 = is_k_extendable(g, 2);
    if (!v2.result) continue;
    ++found;
    CHECK(is_k_extendable(g, 1).result);
  }
  CHECK(found > 0);
}

TEST_CASE("witness_scan fixtures") {
  CHECK_FALSE(witness_scan(complete(6), 2).has_value());
  CHECK_FALSE(witness_scan(complete_bipartite(3, 3), 2).has_value());

  const auto c6 = witness_scan(cycle(6), 2);
  REQUIRE(c6.has_value());
  CHECK(c6->matching == make_matching({Edge{0, 1}, Edge{3, 4}}));

  const auto octa = witness_scan(octahedron(), 2);
  REQUIRE(octa.has_value());
  CHECK(octa->matching.size() == 2);
  REQUIRE(octa->odd_component.has_value());
  CHECK(octa->odd_component->count() == 1);

  CHECK_THROWS_AS(witness_scan(cycle(5), 1), std::invalid_argument);
}

TEST_CASE("deficient-cut scan produces valid stranding witnesses") {
  const auto c6 = witness_from_deficient_cuts(cycle(6), 2);
  REQUIRE(c6.has_value());
  CHECK(c6->matching == make_matching({Edge{0, 1}, Edge{3, 4}}));
  REQUIRE(c6->odd_component.has_value());
  CHECK(*c6->odd_component == VertexSet::of({2}));

  CHECK_FALSE(witness_from_deficient_cuts(octahedron(), 2).has_value());
  CHECK_FALSE(witness_from_deficient_cuts(complete(6), 2).has_value());

  std::mt19937 rng(7303);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_connected_graph(rng, 8);
    const auto w = witness_from_deficient_cuts(g, 2);
    if (!w) continue;
    CHECK(is_matching_of(g, w->matching));
    CHECK(w->matching.size() <= 2);
    bool found = false;
    for (const VertexSet& comp : component_split(g, w->matching.covered()).components)
      found = found || comp == *w->odd_component;
    CHECK(found);
    CHECK_FALSE(oracle::k_extendable(g, 2));
  }
}

TEST_CASE("minimality fixtures") {
  CHECK(is_minimal_k_extendable(complete(6), 2).result);
  CHECK(is_minimal_k_extendable(cycle(6), 1).result);
  CHECK(is_minimal_k_extendable(complete_bipartite(3, 3), 2).result);

  const MinimalityVerdict k44 = is_minimal_k_extendable(complete_bipartite(4, 4), 2);
  CHECK_FALSE(k44.result);
  REQUIRE(k44.non_critical_edge.has_value());
  const Graph pruned = complete_bipartite(4, 4).with_edge_removed(*k44.non_critical_edge);
  CHECK(is_connected(pruned));
  CHECK(is_k_extendable(pruned, 2).result);

  CHECK_THROWS_AS(is_minimal_k_extendable(cycle(6), 2), std::invalid_argument);
}

TEST_CASE("non-critical edges re-validate on random graphs") {
  std::mt19937 rng(7304);
  int seen = 0;
  for (int trial = 0; trial < 300 && seen < 15; ++trial) {
    const Graph g = random_connected_graph(rng, 8, 3, 5);
    if (!is_k_extendable(g, 1).result) continue;
    const MinimalityVerdict verdict = is_minimal_k_extendable(g, 1);
    if (verdict.result) continue;
    ++seen;
    const Graph pruned = g.with_edge_removed(*verdict.non_critical_edge);
    CHECK(is_connected(pruned));
    CHECK(is_k_extendable(pruned, 1).result);
    CHECK(oracle::k_extendable(pruned, 1));
  }
  CHECK(seen > 0);
}

TEST_CASE("property suite fixtures") {
  const PropertyReport k6 = property_suite(complete(6), 2);
  CHECK(k6.downward_and_connected == CheckStatus::pass);
  CHECK(k6.minimal_degree_window == CheckStatus::pass);
  CHECK(k6.claw_free_degree_bound == CheckStatus::pass);
  CHECK(k6.cut_matching_bound == CheckStatus::pass);
  CHECK(k6.all_pass());
  CHECK(k6.failed_checks().empty());

  const PropertyReport k33 = property_suite(complete_bipartite(3, 3), 2);
  CHECK(k33.downward_and_connected == CheckStatus::pass);
  CHECK(k33.minimal_degree_window == CheckStatus::pass);
  CHECK(k33.claw_free_degree_bound == CheckStatus::not_applicable);
  CHECK(k33.all_pass());

  const PropertyReport c6 = property_suite(cycle(6), 1);
  CHECK(c6.downward_and_connected == CheckStatus::pass);
  CHECK(c6.minimal_degree_window == CheckStatus::pass);
  CHECK(c6.claw_free_degree_bound == CheckStatus::pass);
  CHECK(c6.all_pass());

  // not 2-extendable: every check is out of domain
  const PropertyReport octa = property_suite(octahedron(), 2);
  CHECK(octa.downward_and_connected == CheckStatus::not_applicable);
  CHECK(octa.minimal_degree_window == CheckStatus::not_applicable);
  CHECK(octa.claw_free_degree_bound == CheckStatus::not_applicable);
  CHECK(octa.cut_matching_bound == CheckStatus::not_applicable);

  CHECK_THROWS_AS(property_suite(cycle(5), 1), std::invalid_argument);
}
