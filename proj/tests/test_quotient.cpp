#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tat/catalog.hpp"
#include "tat/inverse.hpp"
#include "tat/quotient.hpp"

using namespace tat;

namespace {

// chi of the erased graph counted by hand.
long long chi(const RibbonGraph& g) {
  auto label = oracle::vertex_label(g);
  std::set<int> v;
  long long half = 0;
  for (int h = 0; h < g.size(); ++h) {
    if (g.P.count(label[h]) || g.P.count(label[g.opposite[h]])) continue;
    v.insert(label[h]);
    ++half;
  }
  return static_cast<long long>(v.size()) - half / 2;
}

// Riemann-Hurwitz with every count taken from the test side.
bool hurwitz(const GraphAutomorphism& a) {
  OrbitGraph o = orbit_graph(a);
  long long n = a.order, deficit = 0;
  for (const auto& b : branch_points(a)) deficit += n - n / b.k;
  return chi(a.graph) == n * chi(o.quotient) - deficit;
}

}  // namespace

TEST_CASE("K_{4,11} quotient") {
  GraphAutomorphism a = tat_map(catalog::complete_bipartite(4, 11, Rational(1, 2)));
  OrbitGraph o = orbit_graph(a);
  CHECK(o.base_genus == 0);
  CHECK(o.base_boundary == 1);
  auto bp = branch_points(a);
  REQUIRE(bp.size() == 2);
  std::set<std::pair<int, int>> got;
  for (const auto& b : bp) {
    got.insert({b.k, b.p});
    CHECK(b.s * b.k == 44);
  }
  CHECK(got == std::set<std::pair<int, int>>{{11, 4}, {4, 3}});
  CHECK(riemann_hurwitz_holds(a));
  CHECK(hurwitz(a));
}

TEST_CASE("identity map") {
  GraphAutomorphism a = tat_map(catalog::circle(1));
  OrbitGraph o = orbit_graph(a);
  CHECK(o.base_genus == 0);
  CHECK(o.base_boundary == 2);
  CHECK(branch_points(a).empty());
  CHECK(hurwitz(a));
}

TEST_CASE("Riemann-Hurwitz on constructed graphs") {
  std::vector<std::pair<SeifertFibering, HorizontalClass>> cases = {
      {{0, 2, {{3, 2}, {2, 1}}, {}, {}}, {2, {1}, {}}},
      {{1, 1, {{5, 2}}, {}, {}}, {3, {1, 0}, {}}},
      {{0, 3, {{7, 3}}, {}, {}}, {4, {1, 2}, {}}},
  };
  for (const auto& [f, h] : cases) {
    Realization r = realize_tat(f, h);
    GraphAutomorphism a = tat_map(r.graph);
    CHECK(riemann_hurwitz_holds(a));
    CHECK(hurwitz(a));
  }
}
