#pragma once

// Test-side reimplementations, written without the library's helpers.

#include <array>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tat/io.hpp"

namespace oracle {

using tat::Rational;
using tat::RibbonGraph;

inline std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FIXTURES) + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RibbonGraph fixture_graph(const std::string& name) {
  return tat::graph_from_json(tat::parse_text(slurp(name)));
}

// Vertex label of each half-edge: smallest member of its next_at_vertex orbit.
inline std::vector<int> vertex_label(const RibbonGraph& g) {
  std::vector<int> out(g.size(), -1);
  for (int h = 0; h < g.size(); ++h) {
    int m = h;
    for (int x = g.next_at_vertex[h]; x != h; x = g.next_at_vertex[x]) m = std::min(m, x);
    out[h] = m;
  }
  return out;
}

// Number of cycles of h -> next(opp(h)); graphs without P only.
inline int count_faces(const RibbonGraph& g) {
  std::vector<bool> seen(g.size(), false);
  int count = 0;
  for (int h = 0; h < g.size(); ++h) {
    if (seen[h]) continue;
    ++count;
    int x = h;
    while (!seen[x]) {
      seen[x] = true;
      x = g.next_at_vertex[g.opposite[x]];
    }
  }
  return count;
}

struct Point {
  int d;  // directed edge
  Rational t;
};

// Walk of length 1 from (d, t) one edge at a time.
inline Point walk(const RibbonGraph& g, Point p) {
  auto label = vertex_label(g);
  Rational left = 1;
  for (;;) {
    Rational room = g.length[p.d] - p.t;
    if (left <= room) return {p.d, p.t + left};
    left -= room;
    int arrive = g.opposite[p.d];
    int v = label[arrive];
    p.d = g.P.count(v) ? g.sigma.at(v) : g.next_at_vertex[arrive];
    p.t = 0;
  }
}

// Same point on the graph, written as (edge label, offset from the label side) or a vertex.
inline std::pair<int, Rational> place(const RibbonGraph& g, const Point& p) {
  auto label = vertex_label(g);
  if (p.t == 0) return {-1 - label[p.d], 0};
  if (p.t == g.length[p.d]) return {-1 - label[g.opposite[p.d]], 0};
  int e = std::min(p.d, g.opposite[p.d]);
  return {e, e == p.d ? p.t : Rational(g.length[p.d] - p.t)};
}

inline bool tat_at(const RibbonGraph& g, int d, const Rational& t) {
  Point f = walk(g, {d, t});
  Point b = walk(g, {g.opposite[d], g.length[d] - t});
  return place(g, f) == place(g, b);
}

// Order of the tete-a-tete map: lcm of the orbit lengths of edge midpoints.
inline long long map_order(const RibbonGraph& g) {
  long long order = 1;
  for (int d = 0; d < g.size(); ++d) {
    Point start{d, g.length[d] / 2};
    auto home = place(g, start);
    Point p = start;
    long long steps = 0;
    do {
      p = walk(g, p);
      ++steps;
    } while (place(g, p) != home && steps < 100000);
    order = std::lcm(order, steps);
  }
  return order;
}

using Mat = std::array<std::array<long long, 2>, 2>;

inline Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

// Literal products J (D E_k D) J ... (D E_1 D) J and E_k D J (D E_{k-1} D) J ... (D E_1 D) J.
inline Mat gluing_literal(const std::vector<long long>& e, bool to_disk) {
  const Mat J{{{0, 1}, {1, 0}}}, D{{{-1, 0}, {0, 1}}};
  auto E = [](long long x) { return Mat{{{-1, 0}, {x, 1}}}; };
  const int k = static_cast<int>(e.size());
  Mat m = J;
  for (int i = 0; i < k - 1; ++i) m = mul(J, mul(mul(D, mul(E(e[i]), D)), m));
  if (to_disk) return mul(E(e[k - 1]), mul(D, m));
  return mul(J, mul(mul(D, mul(E(e[k - 1]), D)), m));
}

}  // namespace oracle
