#include "tat/quotient.hpp"

#include <numeric>

namespace tat {

OrbitGraph orbit_graph(const GraphAutomorphism& a) {
  const RibbonGraph& g = a.graph;
  if (!is_ribbon_automorphism(g, a.perm)) throw NotAutomorphism("permutation check failed");
  if (compose_power(a.perm, a.order) != identity_automorphism(g).perm)
    throw NotAutomorphism("order is wrong");
  const int n = g.size();
  std::vector<int> proj(n, -1);
  int count = 0;
  for (int h = 0; h < n; ++h) {
    if (proj[h] != -1) continue;
    for (int x = h; proj[x] == -1; x = a.perm[x]) proj[x] = count;
    ++count;
  }
  RibbonGraph q;
  q.opposite.assign(count, -1);
  q.next_at_vertex.assign(count, -1);
  q.length.assign(count, 0);
  for (int h = 0; h < n; ++h) {
    int o = proj[h];
    if (proj[g.opposite[h]] == o) throw NotAutomorphism("edge inverted; subdivide first");
    q.opposite[o] = proj[g.opposite[h]];
    q.next_at_vertex[o] = proj[g.next_at_vertex[h]];
    q.length[o] = g.length[h];
  }
  auto qvid = q.vertex_ids();
  for (int v : g.P) q.P.insert(qvid[proj[v]]);
  for (auto [from, to] : g.sigma) q.sigma[qvid[proj[from]]] = qvid[proj[to]];
  auto inv = surface_invariants(q);
  return {q, proj, inv.genus, inv.boundary_count};
}

std::vector<BranchPoint> branch_points(const GraphAutomorphism& a) {
  const RibbonGraph& g = a.graph;
  auto vid = g.vertex_ids();
  std::vector<char> seen(g.size(), 0);
  std::vector<BranchPoint> out;
  for (int v : g.vertices()) {
    if (seen[v]) continue;
    int s = 0;
    int x = v;
    do {
      seen[x] = 1;
      ++s;
      x = vid[a.perm[x]];
    } while (x != v);
    int k = a.order / s;
    if (k <= 1) continue;
    auto power = compose_power(a.perm, s);
    int d = g.valency(v), j = 0;
    for (int y = v; y != power[v]; y = g.next_at_vertex[y]) ++j;
    int gd = std::gcd(j, d);
    if (d / gd != k) throw NotAutomorphism("local rotation does not match isotropy");
    out.push_back({v, k, s, j / gd});
  }
  return out;
}

bool riemann_hurwitz_holds(const GraphAutomorphism& a) {
  auto og = orbit_graph(a);
  int chi = surface_invariants(a.graph).euler_characteristic;
  int chi_q = surface_invariants(og.quotient).euler_characteristic;
  long long rhs = static_cast<long long>(a.order) * chi_q;
  for (const auto& b : branch_points(a)) rhs -= a.order - a.order / b.k;
  return rhs == chi;
}

}  // namespace tat
