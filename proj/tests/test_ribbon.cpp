#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "tat/catalog.hpp"
#include "tat/ribbon.hpp"

using namespace tat;

namespace {

std::string kind_of(const RibbonGraph& g) {
  try {
    validate(g);
  } catch (const ValidationError& e) {
    return e.kind;
  }
  return "ok";
}

// A loop at a centre vertex with one or two hairs ending at P vertices.
RibbonGraph hairy_loop(bool two_hairs) {
  RibbonGraph g;
  if (two_hairs) {
    g.opposite = {1, 0, 3, 2, 5, 4};
    g.next_at_vertex = {1, 2, 4, 3, 0, 5};
    g.P = {3, 5};
  } else {
    g.opposite = {1, 0, 3, 2};
    g.next_at_vertex = {1, 2, 0, 3};
    g.P = {3};
  }
  g.length.assign(g.opposite.size(), Rational(1, 2));
  for (int v : g.P) g.sigma[v] = v;
  return g;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(kind_of(catalog::circle(1)) == "ok");
  CHECK(kind_of(catalog::complete_bipartite(4, 11, Rational(1, 2))) == "ok");
  CHECK(kind_of(hairy_loop(true)) == "P-condition");
  CHECK(kind_of(RibbonGraph{}) == "empty");

  RibbonGraph g = catalog::circle(1);
  g.opposite = {0, 1};
  CHECK(kind_of(g) == "opposite-fixed-point");

  g = catalog::circle(1);
  g.length = {Rational(0), Rational(0)};
  CHECK(kind_of(g) == "length");

  g = catalog::theta(Rational(1, 2));
  g.length[0] = Rational(1, 3);
  CHECK(kind_of(g) == "length");
}

TEST_CASE("faces against a direct traversal") {
  RibbonGraph c = catalog::circle(Rational(3, 4));
  auto fc = faces(c);
  REQUIRE(fc.size() == 2);
  for (const auto& f : fc) CHECK(f.total_length == Rational(3, 4));

  RibbonGraph th = catalog::theta(Rational(1, 2));
  CHECK(faces(th).size() == 3);
  CHECK(oracle::count_faces(th) == 3);

  RibbonGraph k = catalog::complete_bipartite(4, 11, Rational(1, 2));
  auto fk = faces(k);
  REQUIRE(fk.size() == 1);
  CHECK(fk[0].total_length == 44);
  CHECK(oracle::count_faces(k) == 1);

  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 5; ++n) {
      RibbonGraph b = catalog::complete_bipartite(m, n, Rational(1));
      CHECK(static_cast<int>(faces(b).size()) == oracle::count_faces(b));
    }
}

TEST_CASE("surface invariants") {
  CHECK(surface_invariants(catalog::circle(1)) == SurfaceInvariants{0, 2, 0});
  CHECK(surface_invariants(catalog::complete_bipartite(4, 11, Rational(1, 2))) == SurfaceInvariants{15, 1, -29});
  CHECK(surface_invariants(catalog::theta(Rational(1, 2))) == SurfaceInvariants{0, 3, -1});
}

TEST_CASE("P vertices are erased from faces") {
  RibbonGraph s = hairy_loop(false);
  CHECK(kind_of(s) == "ok");
  auto inv = surface_invariants(s);
  CHECK(inv.boundary_count == 2);
  CHECK(inv.genus == 0);
}

TEST_CASE("subdivide") {
  RibbonGraph c = subdivide(catalog::circle(1), 0, Rational(1, 2));
  CHECK(c.vertices().size() == 2);
  CHECK(c.edges().size() == 2);
  for (int e : c.edges()) CHECK(c.length[e] == Rational(1, 2));
  CHECK(surface_invariants(c) == surface_invariants(catalog::circle(1)));

  RibbonGraph k = subdivide(catalog::complete_bipartite(4, 11, Rational(1, 2)), 6, Rational(1, 4));
  CHECK(surface_invariants(k).euler_characteristic == -29);
  CHECK(k.length[6] == Rational(1, 4));

  RibbonGraph th = catalog::theta(Rational(1, 2));
  int before = oracle::count_faces(th);
  RibbonGraph split = subdivide(th, 3, Rational(1, 5));
  CHECK(oracle::count_faces(split) == before);
  CHECK(faces(split).size() == 3);
}
