#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tat/catalog.hpp"
#include "tat/inverse.hpp"
#include "tat/tat_core.hpp"

using namespace tat;

namespace {

// Random interior points; every one must satisfy the oracle.
int oracle_failures(const RibbonGraph& g, int samples, unsigned seed) {
  std::mt19937 rng(seed);
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    int d = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
    int k = std::uniform_int_distribution<int>(1, 96)(rng);
    Rational t = g.length[d] * Rational(k, 97);
    if (!oracle::tat_at(g, d, t)) ++bad;
  }
  return bad;
}

}  // namespace

TEST_CASE("K_{4,11} is tete-a-tete") {
  RibbonGraph k = oracle::fixture_graph("k411.json");
  CHECK(check_tat(k).ok);
  CHECK(oracle_failures(k, 300, 7) == 0);
}

TEST_CASE("perturbed K_{4,11} is not") {
  RibbonGraph p = oracle::fixture_graph("perturbed.json");
  TatCheck c = check_tat(p);
  REQUIRE_FALSE(c.ok);
  REQUIRE(c.counterexample.has_value());
  CHECK_FALSE(oracle::tat_at(p, c.counterexample->directed_edge, c.counterexample->offset));
}

TEST_CASE("safe walk endpoint") {
  RibbonGraph k = catalog::complete_bipartite(4, 11, Rational(1, 2));
  for (int d : {0, 5, 17, 40}) {
    WalkResult w = safe_walk(k, {d, Rational(1, 4)}, Direction::Forward);
    oracle::Point o = oracle::walk(k, {d, Rational(1, 4)});
    CHECK(oracle::place(k, {w.endpoint.directed_edge, w.endpoint.offset}) == oracle::place(k, o));
    CHECK(w.itinerary.size() == 3);
  }
  CHECK_THROWS_AS(safe_walk(k, {0, Rational(0)}, Direction::Forward), StartAtVertex);
  CHECK_THROWS_AS(safe_walk(k, {0, Rational(1, 2)}, Direction::Backward), StartAtVertex);
}

TEST_CASE("order of the map") {
  RibbonGraph k = catalog::complete_bipartite(4, 11, Rational(1, 2));
  GraphAutomorphism a = tat_map(k);
  CHECK(a.order == 44);
  CHECK(oracle::map_order(k) == 44);
  CHECK(is_ribbon_automorphism(a.graph, a.perm));

  RibbonGraph k23 = catalog::complete_bipartite(2, 3, Rational(1, 2));
  REQUIRE(check_tat(k23).ok);
  CHECK(tat_map(k23).order == oracle::map_order(k23));

  CHECK(tat_map(catalog::circle(1)).order == 1);
  RibbonGraph c2 = catalog::circle(2);
  CHECK(tat_map(c2).order == oracle::map_order(c2));
  CHECK(tat_map(catalog::theta(Rational(1, 2))).order == 1);
}

TEST_CASE("boundary rotation of K_{4,11}") {
  auto rot = boundary_rotation(tat_map(catalog::complete_bipartite(4, 11, Rational(1, 2))));
  REQUIRE(rot.size() == 1);
  CHECK(rot[0].orbit_size == 1);
  CHECK(rot[0].rotation == Rational(43, 44));
  CHECK(rot[0].signed_rotation == Rational(-1, 44));
  CHECK(rot[0].forward_fraction == Rational(1, 44));
}

TEST_CASE("general tete-a-tete graph with P vertices") {
  Realization r = realize_tat({1, 1, {{5, 2}}, {}, {}}, {3, {1, 0}, {}});
  REQUIRE_FALSE(r.graph.P.empty());
  CHECK(check_tat(r.graph).ok);
  CHECK(oracle_failures(r.graph, 300, 11) == 0);
  CHECK(oracle::map_order(r.graph) == 15);
}

TEST_CASE("compose_power and permutation_order") {
  std::vector<int> p{1, 2, 0, 4, 3};
  CHECK(permutation_order(p) == 6);
  CHECK(compose_power(p, 3) == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(compose_power(p, -1) == std::vector<int>{2, 0, 1, 4, 3});
}
