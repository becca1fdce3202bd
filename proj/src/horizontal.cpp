#include "tat/horizontal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace tat {

namespace {

int find(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

std::vector<EdgeCycle> fundamental_cycles(const OrbitGraph& orbit, const std::vector<int>& priority) {
  const RibbonGraph& q = orbit.quotient;
  if (!is_connected(q)) throw Disconnected();
  auto vid = q.vertex_ids();
  std::vector<int> order = priority.empty() ? q.edges() : priority;
  std::vector<int> uf(q.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::vector<char> in_tree(q.size(), 0);
  for (int e : order) {
    int a = find(uf, vid[e]), b = find(uf, vid[q.opposite[e]]);
    if (a == b) continue;
    uf[a] = b;
    in_tree[e] = in_tree[q.opposite[e]] = 1;
  }
  std::map<int, std::vector<int>> adj;
  for (int h = 0; h < q.size(); ++h)
    if (in_tree[h]) adj[vid[h]].push_back(h);
  auto tree_path = [&](int from, int to) {
    std::map<int, int> via;
    std::queue<int> bfs;
    bfs.push(from);
    via[from] = -1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      if (v == to) break;
      for (int h : adj[v]) {
        int w = vid[q.opposite[h]];
        if (!via.count(w)) {
          via[w] = h;
          bfs.push(w);
        }
      }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = vid[via[v]]) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
  };
  std::vector<EdgeCycle> cycles;
  for (int e : q.edges()) {
    if (in_tree[e]) continue;
    EdgeCycle c{e};
    auto back = tree_path(vid[q.opposite[e]], vid[e]);
    c.insert(c.end(), back.begin(), back.end());
    cycles.push_back(std::move(c));
  }
  return cycles;
}

HorizontalClass horizontal_class(const GraphAutomorphism& a, const std::vector<BranchPoint>& branch,
                                 const OrbitGraph& orbit, const std::vector<int>& priority) {
  const RibbonGraph& g = a.graph;
  const std::int64_t n = a.order;
  std::int64_t m = 1;
  for (const auto& b : branch) m = std::lcm(m, static_cast<std::int64_t>(b.k));
  if (n % m != 0) throw OrderMismatch();
  HorizontalClass hc;
  hc.q = n / m;
  hc.basis = fundamental_cycles(orbit, priority);

  // Intermediate cover: half-edges of g modulo a^q.
  auto b = compose_power(a.perm, hc.q);
  std::vector<int> cls(g.size(), -1);
  int count = 0;
  for (int h = 0; h < g.size(); ++h) {
    if (cls[h] != -1) continue;
    for (int x = h; cls[x] == -1; x = b[x]) cls[x] = count;
    ++count;
  }
  std::vector<int> rep(count), iota_c(count), nu_c(count), proj(count), act(count);
  for (int h = g.size() - 1; h >= 0; --h) rep[cls[h]] = h;
  for (int c = 0; c < count; ++c) {
    int h = rep[c];
    iota_c[c] = cls[g.opposite[h]];
    nu_c[c] = cls[g.next_at_vertex[h]];
    proj[c] = orbit.projection[h];
    act[c] = cls[a.perm[h]];
  }
  // Half-edge at the vertex of x projecting onto quotient half-edge target.
  auto at_vertex = [&](int x, int target) {
    int y = x;
    do {
      if (proj[y] == target) return y;
      y = nu_c[y];
    } while (y != x);
    throw NotAutomorphism("cycle does not lift");
  };
  for (const auto& cyc : hc.basis) {
    int start = -1;
    for (int c = 0; c < count && start < 0; ++c)
      if (proj[c] == cyc[0]) start = c;
    std::vector<int> pts{start};
    for (;;) {
      int x = pts.back();
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (i > 0) x = at_vertex(x, cyc[i]);
        x = iota_c[x];
      }
      x = at_vertex(x, cyc[0]);
      if (x == start) break;
      pts.push_back(x);
    }
    std::int64_t qp = static_cast<std::int64_t>(pts.size());
    std::int64_t k = hc.q / qp;
    int y = start;
    for (std::int64_t i = 0; i < k; ++i) y = act[y];
    auto it = std::find(pts.begin(), pts.end(), y);
    if (it == pts.end()) throw NotAutomorphism("residual action leaves the component");
    std::int64_t t = (it - pts.begin()) + 1;
    hc.p.push_back(mod((t - 1) * k, hc.q));
  }
  return hc;
}

std::int64_t component_count(const HorizontalClass& c) {
  std::int64_t g = c.q;
  for (auto x : c.p) g = std::gcd(g, x);
  return g;
}

}  // namespace tat
