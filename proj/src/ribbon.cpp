#include "tat/ribbon.hpp"

#include <algorithm>
#include <numeric>

namespace tat {

std::vector<int> RibbonGraph::vertex_ids() const {
  const int n = size();
  std::vector<int> vid(n, -1);
  for (int h = 0; h < n; ++h) {
    if (vid[h] != -1) continue;
    int x = h;
    do {
      vid[x] = h;
      x = next_at_vertex[x];
    } while (x != h);
  }
  return vid;
}

std::vector<int> RibbonGraph::vertices() const {
  std::vector<int> vs;
  auto vid = vertex_ids();
  for (int h = 0; h < size(); ++h)
    if (vid[h] == h) vs.push_back(h);
  return vs;
}

std::vector<int> RibbonGraph::edges() const {
  std::vector<int> es;
  for (int h = 0; h < size(); ++h)
    if (h < opposite[h]) es.push_back(h);
  return es;
}

int RibbonGraph::valency(int v) const {
  int d = 0, x = v;
  do {
    ++d;
    x = next_at_vertex[x];
  } while (x != v);
  return d;
}

Rational RibbonGraph::total_length() const {
  Rational t = 0;
  for (int e : edges()) t += length[e];
  return t;
}

namespace {

bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

void validate(const RibbonGraph& g) {
  const int n = g.size();
  if (n == 0) throw ValidationError("empty", 0, "no half-edges");
  if (static_cast<int>(g.next_at_vertex.size()) != n || static_cast<int>(g.length.size()) != n)
    throw ValidationError("structure", 0, "array sizes differ");
  if (!is_permutation_of_range(g.opposite) || !is_permutation_of_range(g.next_at_vertex))
    throw ValidationError("structure", 0, "opposite/next_at_vertex must be permutations");
  for (int h = 0; h < n; ++h) {
    if (g.opposite[h] == h) throw ValidationError("opposite-fixed-point", h, "iota has a fixed point");
    if (g.opposite[g.opposite[h]] != h) throw ValidationError("opposite-involution", h, "iota is not an involution");
    if (g.length[h] <= 0) throw ValidationError("length", h, "lengths must be positive");
    if (g.length[h] != g.length[g.opposite[h]]) throw ValidationError("length", h, "halves disagree");
  }
  auto vid = g.vertex_ids();
  for (int v : g.P) {
    if (v < 0 || v >= n || vid[v] != v) throw ValidationError("P-not-vertex", v, "not a vertex id");
    if (g.valency(v) != 1) throw ValidationError("P-not-univalent", v, "P-vertex must be univalent");
    if (g.P.count(vid[g.opposite[v]])) throw ValidationError("P-condition", v, "edge joins two P-vertices");
  }
  if (g.sigma.size() != g.P.size()) throw ValidationError("sigma", 0, "sigma must be defined exactly on P");
  std::set<int> image;
  for (auto [from, to] : g.sigma) {
    if (!g.P.count(from) || !g.P.count(to)) throw ValidationError("sigma", from, "sigma leaves P");
    image.insert(to);
  }
  if (image.size() != g.P.size()) throw ValidationError("sigma", 0, "sigma is not a bijection");
  for (int v : g.vertices()) {
    int d = g.valency(v);
    if (d == 1 && !g.P.count(v)) throw ValidationError("univalent-not-in-P", v, "univalent vertex outside P");
    if (d < 2) continue;
    int x = v;
    do {
      int y = g.next_at_vertex[x];
      if (g.P.count(vid[g.opposite[x]]) && g.P.count(vid[g.opposite[y]]))
        throw ValidationError("P-condition", v, "two consecutive edges lead to P");
      x = y;
    } while (x != v);
  }
}

std::vector<bool> erased_support(const RibbonGraph& g) {
  auto vid = g.vertex_ids();
  std::vector<bool> keep(g.size());
  for (int h = 0; h < g.size(); ++h) keep[h] = !g.P.count(vid[h]) && !g.P.count(vid[g.opposite[h]]);
  return keep;
}

std::vector<int> erased_next(const RibbonGraph& g) {
  auto keep = erased_support(g);
  std::vector<int> nu(g.size(), -1);
  for (int h = 0; h < g.size(); ++h) {
    if (!keep[h]) continue;
    int x = g.next_at_vertex[h];
    while (!keep[x]) x = g.next_at_vertex[x];
    nu[h] = x;
  }
  return nu;
}

std::vector<FaceCycle> faces(const RibbonGraph& g) {
  auto keep = erased_support(g);
  auto nu = erased_next(g);
  std::vector<char> seen(g.size(), 0);
  std::vector<FaceCycle> out;
  for (int h = 0; h < g.size(); ++h) {
    if (!keep[h] || seen[h]) continue;
    FaceCycle f;
    f.total_length = 0;
    int x = h;
    do {
      seen[x] = 1;
      f.half_edges.push_back(x);
      f.total_length += g.length[x];
      x = nu[g.opposite[x]];
    } while (x != h);
    out.push_back(std::move(f));
  }
  return out;
}

bool is_connected(const RibbonGraph& g) {
  const int n = g.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int h = stack.back();
    stack.pop_back();
    for (int y : {g.opposite[h], g.next_at_vertex[h]}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

SurfaceInvariants surface_invariants(const RibbonGraph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  int V = static_cast<int>(g.vertices().size());
  int E = g.size() / 2;
  int chi = V - E;
  int r = static_cast<int>(faces(g).size());
  return {(2 - chi - r) / 2, r, chi};
}

RibbonGraph subdivide(const RibbonGraph& g, int h, const Rational& offset) {
  if (h < 0 || h >= g.size() || offset <= 0 || offset >= g.length[h]) throw OffsetOutOfRange();
  RibbonGraph s = g;
  const int x = g.size(), y = g.size() + 1, hp = g.opposite[h];
  Rational rest = g.length[h] - offset;
  s.opposite.resize(g.size() + 2);
  s.next_at_vertex.resize(g.size() + 2);
  s.length.resize(g.size() + 2);
  s.opposite[h] = x;
  s.opposite[x] = h;
  s.opposite[y] = hp;
  s.opposite[hp] = y;
  s.next_at_vertex[x] = y;
  s.next_at_vertex[y] = x;
  s.length[h] = s.length[x] = offset;
  s.length[y] = s.length[hp] = rest;
  return s;
}

}  // namespace tat
