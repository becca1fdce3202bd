#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tat/seifert.hpp"

using namespace tat;
using Chain = std::vector<std::int64_t>;

namespace {

Rational ratio(long long a, long long b) {
  Rational x(static_cast<long>(a), static_cast<long>(b));
  x.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("pairs from rotations") {
  CHECK(pair_from_rotation(11, 4) == SeifertPair{11, 8});
  CHECK(pair_from_rotation(4, 3) == SeifertPair{4, 1});
  CHECK(pair_from_rotation(44, -1) == SeifertPair{44, 1});
  CHECK((8 * 4) % 11 == 10);
  CHECK_THROWS_AS(pair_from_rotation(6, 2), NotCoprime);
}

TEST_CASE("torus types") {
  CHECK(torus_type({3, 2}) == std::pair<std::int64_t, std::int64_t>{1, 3});
  CHECK(torus_type({2, 1}) == std::pair<std::int64_t, std::int64_t>{1, 2});
  CHECK(torus_type({11, 8}) == std::pair<std::int64_t, std::int64_t>{4, 11});
  CHECK_THROWS_AS(torus_type({4, 2}), NotNormalized);
}

TEST_CASE("euler number") {
  CHECK(euler_b({{4, 1}, {11, 8}, {44, 1}}) == -1);
  CHECK(euler_b({}) == 0);
  CHECK_THROWS_AS(euler_b({{2, 1}, {3, 2}}), NonIntegralEuler);
}

TEST_CASE("continued fractions") {
  CHECK(cont_frac(11, 8) == Chain{2, 2, 3, 2});
  CHECK(cont_frac(4, 1) == Chain{4});
  CHECK(cont_frac(3, 2) == Chain{2, 2});
  CHECK(cont_frac(2, 1) == Chain{2});
  CHECK_THROWS_AS(cont_frac(4, 2), BadPair);
  CHECK(eval_cont_frac({2, 2, 3, 2}) == Rational(11, 8));
  CHECK(eval_cont_frac({4}) == 4);
  for (int k = 1; k <= 12; ++k) CHECK(eval_cont_frac(Chain(k, 2)) == Rational(k + 1, k));
  CHECK_THROWS_AS(eval_cont_frac({}), EmptyChain);
  CHECK_THROWS_AS(eval_cont_frac({2, 1, 1}), DivisionByZero);
}

TEST_CASE("gluing matrices") {
  GluingMatrix m = gluing_matrix({2}, GluingCase::NodeToDisk);
  CHECK(m == (GluingMatrix() << 0, 1, 1, -2).finished());
  CHECK(gluing_matrix({5}, GluingCase::NodeToNode) == (GluingMatrix() << 1, -5, 0, -1).finished());

  GluingMatrix c1 = gluing_matrix({2, 2, 3, 2}, GluingCase::NodeToNode);
  CHECK(c1(0, 0) * c1(1, 1) - c1(0, 1) * c1(1, 0) == -1);
  CHECK(ratio(-c1(0, 1), c1(0, 0)) == Rational(11, 8));
  CHECK_THROWS_AS(gluing_matrix({}, GluingCase::NodeToNode), EmptyChain);

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int k = std::uniform_int_distribution<int>(1, 8)(rng);
    Chain e(k);
    std::vector<long long> ll(k);
    for (int i = 0; i < k; ++i) ll[i] = e[i] = std::uniform_int_distribution<int>(2, 9)(rng);
    for (bool disk : {false, true}) {
      GluingMatrix m = gluing_matrix(e, disk ? GluingCase::NodeToDisk : GluingCase::NodeToNode);
      auto lit = oracle::gluing_literal(ll, disk);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(m(i, j) == lit[i][j]);
      CHECK(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == -1);
      CHECK((disk ? ratio(-m(1, 1), m(1, 0)) : ratio(-m(0, 1), m(0, 0))) == eval_cont_frac(e));
    }
  }
}

TEST_CASE("plumbing graphs") {
  SeifertFibering k411{0, 1, {{11, 8}, {4, 1}}, {}, std::vector<SeifertPair>{{44, 1}}};
  PlumbingGraph p = plumbing_from_fibering(k411);
  CHECK(p.central_e == -1);
  CHECK(p.bamboos == std::vector<Chain>{{2, 2, 3, 2}, {4}});
  CHECK(p.arrows == 1);
  REQUIRE(p.arrow_bamboos.has_value());
  CHECK(*p.arrow_bamboos == std::vector<Chain>{{44}});

  PlumbingGraph trivial = plumbing_from_fibering({0, 1, {}, 0, {}});
  CHECK(trivial.central_e == 0);
  CHECK(trivial.bamboos.empty());
  CHECK(trivial.arrows == 1);

  PlumbingGraph plumb2 = plumbing_from_fibering({0, 2, {{3, 2}, {2, 1}}, -3, {}});
  CHECK(plumb2.bamboos == std::vector<Chain>{{2, 2}, {2}});
  CHECK(plumb2.arrows == 2);

  SeifertFibering back = fibering_from_plumbing({-3, 0, {{2, 2}, {2}}, 2, {}});
  CHECK(back.g == 0);
  CHECK(back.r == 2);
  CHECK(back.pairs == std::vector<SeifertPair>{{3, 2}, {2, 1}});

  SeifertFibering k = fibering_from_plumbing(p);
  CHECK(k.pairs == std::vector<SeifertPair>{{11, 8}, {4, 1}});
  CHECK(k.b == -1);
  CHECK(fibering_from_plumbing({0, 0, {}, 1, {}}).pairs.empty());
  CHECK_THROWS_AS(fibering_from_plumbing({0, 0, {{}}, 1, {}}), NotStarShaped);
}

TEST_CASE("round trip on normalized fiberings") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertFibering f;
    f.g = std::uniform_int_distribution<int>(0, 3)(rng);
    f.r = std::uniform_int_distribution<int>(0, 3)(rng);
    f.b = std::uniform_int_distribution<int>(-5, 5)(rng);
    int k = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < k; ++i) {
      std::int64_t a = std::uniform_int_distribution<int>(2, 30)(rng), b;
      do b = std::uniform_int_distribution<std::int64_t>(1, a - 1)(rng);
      while (std::gcd(a, b) != 1);
      f.pairs.push_back({a, b});
    }
    SeifertFibering g = fibering_from_plumbing(plumbing_from_fibering(f));
    CHECK(g.g == f.g);
    CHECK(g.r == f.r);
    CHECK(g.b == f.b);
    CHECK(g.pairs == f.pairs);
  }
  SeifertFibering shifted{0, 0, {{5, 7}}, 1, {}};
  SeifertFibering n = normalize(shifted);
  CHECK(n.pairs[0] == SeifertPair{5, 2});
  CHECK(n.b == 2);
}
