#include "tat/catalog.hpp"

namespace tat::catalog {

RibbonGraph circle(const Rational& length) {
  RibbonGraph g;
  g.opposite = {1, 0};
  g.next_at_vertex = {1, 0};
  g.length = {length, length};
  return g;
}

RibbonGraph theta(const Rational& length) {
  RibbonGraph g;
  g.opposite = {1, 0, 3, 2, 5, 4};
  g.next_at_vertex = {2, 5, 4, 1, 0, 3};
  g.length.assign(6, length);
  return g;
}

RibbonGraph complete_bipartite(int m, int n, const Rational& length) {
  RibbonGraph g;
  const int N = 2 * m * n;
  g.opposite.resize(N);
  g.next_at_vertex.resize(N);
  g.length.assign(N, length);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int h = 2 * (i * n + j);
      g.opposite[h] = h + 1;
      g.opposite[h + 1] = h;
      g.next_at_vertex[h] = 2 * (i * n + (j + 1) % n);
      g.next_at_vertex[h + 1] = 2 * (((i + m - 1) % m) * n + j) + 1;
    }
  return g;
}

}  // namespace tat::catalog
