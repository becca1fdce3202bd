#include "tat/tat_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tat {

Location locate(const RibbonGraph& g, const GraphPoint& p) {
  int d = p.directed_edge;
  auto vid = g.vertex_ids();
  if (p.offset == 0) return {true, vid[d], 0};
  if (p.offset == g.length[d]) return {true, vid[g.opposite[d]], 0};
  int e = g.edge_id(d);
  return {false, e, e == d ? p.offset : Rational(g.length[d] - p.offset)};
}

namespace {

struct Walker {
  const RibbonGraph& g;
  std::vector<int> vid;
  // Cycles of d -> depart(opposite[d]) with cumulative lengths.
  std::vector<int> cyc, pos;
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<Rational>> pre;

  explicit Walker(const RibbonGraph& graph) : g(graph), vid(graph.vertex_ids()) {
    const int n = g.size();
    cyc.assign(n, -1);
    pos.assign(n, -1);
    for (int d = 0; d < n; ++d) {
      if (cyc[d] != -1) continue;
      std::vector<int> c;
      std::vector<Rational> s{0};
      for (int e = d; cyc[e] == -1; e = depart(g.opposite[e], nullptr)) {
        cyc[e] = static_cast<int>(cycles.size());
        pos[e] = static_cast<int>(c.size());
        c.push_back(e);
        s.push_back(s.back() + g.length[e]);
      }
      cycles.push_back(std::move(c));
      pre.push_back(std::move(s));
    }
  }

  // Directed edge taken after arriving at a vertex along half-edge h.
  int depart(int h, std::vector<int>* jumps) const {
    int v = vid[h];
    if (g.P.count(v)) {
      if (jumps) jumps->push_back(v);
      return g.sigma.at(v);
    }
    return g.next_at_vertex[h];
  }

  Location where(const GraphPoint& p) const {
    int d = p.directed_edge;
    if (p.offset == 0) return {true, vid[d], 0};
    if (p.offset == g.length[d]) return {true, vid[g.opposite[d]], 0};
    int e = g.edge_id(d);
    return {false, e, e == d ? p.offset : Rational(g.length[d] - p.offset)};
  }

  WalkResult walk(int d, Rational t, Rational budget) const {
    WalkResult w;
    w.itinerary.push_back(d);
    for (;;) {
      Rational rest = g.length[d] - t;
      if (budget <= rest) {
        w.endpoint = {d, t + budget};
        return w;
      }
      budget -= rest;
      d = depart(g.opposite[d], &w.sigma_jumps);
      t = 0;
      w.itinerary.push_back(d);
    }
  }

  // Endpoint of walk(d, t, budget) without the itinerary.
  GraphPoint end(int d, const Rational& t, const Rational& budget) const {
    const auto& c = cycles[cyc[d]];
    const auto& s = pre[cyc[d]];
    const Rational& total = s.back();
    Rational x = s[pos[d]] + t + budget;
    Rational k = floor_of(x / total);
    x -= k * total;
    int j = static_cast<int>(std::upper_bound(s.begin(), s.end() - 1, x) - s.begin()) - 1;
    if (x == s[j]) {
      int prev = c[(j + c.size() - 1) % c.size()];
      return {prev, g.length[prev]};
    }
    return {c[j], x - s[j]};
  }

  // Offsets t in (0, len(d)) where the forward walk from (d, t) ends at a vertex.
  std::vector<Rational> breakpoints(int d) const {
    const Rational& len = g.length[d];
    const auto& s = pre[cyc[d]];
    const Rational& total = s.back();
    Rational x = s[pos[d]] + 1;
    x -= floor_of(x / total) * total;
    std::vector<Rational> out;
    for (int lap = 0; lap < 2; ++lap) {
      Rational lo = x - lap * total, hi = lo + len;
      auto it = std::upper_bound(s.begin(), s.end() - 1, lo);
      for (; it != s.end() - 1 && *it < hi; ++it) out.push_back(*it - lo);
    }
    return out;
  }
};

std::vector<Rational> sample_offsets(std::vector<Rational> cuts, const Rational& len) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rational> pts;
  Rational prev = 0;
  for (const auto& c : cuts) {
    pts.push_back((prev + c) / 2);
    pts.push_back(c);
    prev = c;
  }
  pts.push_back((prev + len) / 2);
  return pts;
}

}  // namespace

WalkResult safe_walk(const RibbonGraph& g, const GraphPoint& start, Direction dir) {
  int d = start.directed_edge;
  if (d < 0 || d >= g.size()) throw StartAtVertex();
  if (start.offset <= 0 || start.offset >= g.length[d]) throw StartAtVertex();
  Walker w(g);
  if (dir == Direction::Forward) return w.walk(d, start.offset, 1);
  return w.walk(g.opposite[d], g.length[d] - start.offset, 1);
}

TatCheck check_tat(const RibbonGraph& g) {
  Walker w(g);
  for (int d : g.edges()) {
    const int b = g.opposite[d];
    const Rational& len = g.length[d];
    std::vector<Rational> cuts = w.breakpoints(d);
    for (const auto& t : w.breakpoints(b)) cuts.push_back(len - t);
    for (const auto& t : sample_offsets(cuts, len)) {
      if (!(w.where(w.end(d, t, 1)) == w.where(w.end(b, len - t, 1)))) return {false, GraphPoint{d, t}};
    }
  }
  return {true, std::nullopt};
}

int permutation_order(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  long long order = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int x = static_cast<int>(i); !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

std::vector<int> compose_power(const std::vector<int>& perm, long long k) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> out(n, -1);
  for (int i = 0; i < n; ++i) {
    if (out[i] != -1) continue;
    std::vector<int> cyc;
    int x = i;
    do {
      cyc.push_back(x);
      x = perm[x];
    } while (x != i);
    long long len = static_cast<long long>(cyc.size());
    long long shift = ((k % len) + len) % len;
    for (long long j = 0; j < len; ++j) out[cyc[j]] = cyc[(j + shift) % len];
  }
  return out;
}

bool is_ribbon_automorphism(const RibbonGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.size()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (int x : perm) {
    if (x < 0 || x >= g.size() || hit[x]) return false;
    hit[x] = 1;
  }
  auto vid = g.vertex_ids();
  for (int h = 0; h < g.size(); ++h) {
    if (perm[g.opposite[h]] != g.opposite[perm[h]]) return false;
    if (perm[g.next_at_vertex[h]] != g.next_at_vertex[perm[h]]) return false;
    if (g.length[perm[h]] != g.length[h]) return false;
    if (g.P.count(vid[h]) != g.P.count(vid[perm[h]])) return false;
  }
  return true;
}

GraphAutomorphism identity_automorphism(const RibbonGraph& g) {
  std::vector<int> id(g.size());
  std::iota(id.begin(), id.end(), 0);
  return {g, id, 1};
}

namespace {

// Image of a vertex under the tete-a-tete map, by continuity from an incident edge.
GraphPoint vertex_image(const Walker& w, int v) {
  auto cuts = w.breakpoints(v);
  Rational first = cuts.empty() ? w.g.length[v] : *std::min_element(cuts.begin(), cuts.end());
  Rational t0 = first / 2;
  GraphPoint r = w.end(v, t0, 1);
  return {r.directed_edge, r.offset - t0};
}

RibbonGraph subdivide_all(const RibbonGraph& g, const std::map<int, std::vector<Rational>>& cuts) {
  RibbonGraph s = g;
  for (const auto& [e, offs] : cuts) {
    std::vector<Rational> sorted = offs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int h = e;
    Rational done = 0;
    for (const auto& o : sorted) {
      int fresh = s.size() + 1;
      s = subdivide(s, h, o - done);
      done = o;
      h = fresh;
    }
  }
  return s;
}

}  // namespace

GraphAutomorphism tat_map(const RibbonGraph& g) {
  validate(g);
  if (!check_tat(g).ok) throw NotTat();
  RibbonGraph cur = g;
  for (;;) {
    Walker w(cur);
    std::map<int, std::vector<Rational>> cuts;
    for (int d : cur.edges())
      for (const auto& t : w.breakpoints(d)) cuts[d].push_back(t);
    for (int v : cur.vertices()) {
      Location loc = w.where(vertex_image(w, v));
      if (!loc.at_vertex) cuts[loc.id].push_back(loc.offset);
    }
    if (cuts.empty()) break;
    cur = subdivide_all(cur, cuts);
  }
  for (;;) {
    Walker w(cur);
    std::vector<int> perm(cur.size());
    std::map<int, std::vector<Rational>> inverted;
    for (int d = 0; d < cur.size(); ++d) {
      Rational mid = cur.length[d] / 2;
      GraphPoint r = w.end(d, mid, 1);
      if (r.offset != mid || cur.length[r.directed_edge] != cur.length[d])
        throw NotAutomorphism("tete-a-tete map is not simplicial");
      perm[d] = r.directed_edge;
      if (perm[d] == cur.opposite[d] && d < perm[d]) inverted[d].push_back(mid);
    }
    if (!inverted.empty()) {
      cur = subdivide_all(cur, inverted);
      continue;
    }
    if (!is_ribbon_automorphism(cur, perm)) throw NotAutomorphism("induced map breaks the ribbon structure");
    int order = permutation_order(perm);
    return {cur, perm, order};
  }
}

std::vector<BoundaryRotation> boundary_rotation(const GraphAutomorphism& a) {
  auto fs = faces(a.graph);
  std::vector<int> face_of(a.graph.size(), -1), pos(a.graph.size(), -1);
  for (int i = 0; i < static_cast<int>(fs.size()); ++i)
    for (int j = 0; j < static_cast<int>(fs[i].half_edges.size()); ++j) {
      face_of[fs[i].half_edges[j]] = i;
      pos[fs[i].half_edges[j]] = j;
    }
  std::vector<char> seen(fs.size(), 0);
  std::vector<BoundaryRotation> out;
  for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
    if (seen[i]) continue;
    BoundaryRotation br;
    int f = i;
    do {
      seen[f] = 1;
      br.orbit.push_back(f);
      f = face_of[a.perm[fs[f].half_edges[0]]];
      if (f < 0) throw NotAutomorphism("face not mapped to a face");
    } while (f != i);
    br.orbit_size = static_cast<int>(br.orbit.size());
    auto power = compose_power(a.perm, br.orbit_size);
    int h0 = fs[i].half_edges[0];
    int img = power[h0];
    if (face_of[img] != i) throw NotAutomorphism("face orbit is inconsistent");
    Rational shift = 0;
    for (int j = 0; j < pos[img]; ++j) shift += a.graph.length[fs[i].half_edges[j]];
    br.forward_fraction = shift / fs[i].total_length;
    br.rotation = frac(-br.forward_fraction);
    br.signed_rotation = signed_frac(br.rotation);
    out.push_back(std::move(br));
  }
  return out;
}

}  // namespace tat
