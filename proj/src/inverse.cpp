#include "tat/inverse.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <optional>
#include <stdexcept>

#include "tat/catalog.hpp"
#include "tat/eigen_rational.hpp"
#include "tat/simplex.hpp"

namespace tat {

HandyModel handy_model(const SeifertFibering& f) {
  if (f.r < 1) throw ClosedManifold();
  if (f.g < 0) throw std::invalid_argument("negative genus");
  SeifertFibering nf = normalize(f);
  HandyModel m;
  m.g = nf.g;
  m.r = nf.r;
  for (const auto& s : nf.pairs) {
    if (s.alpha < 2) continue;
    m.pairs.push_back(s);
    m.torus_types.push_back(torus_type(s));
  }
  m.arc_order.resize(m.pairs.size());
  std::iota(m.arc_order.begin(), m.arc_order.end(), 0);
  m.circles = 2 * m.g + m.r - 1;
  return m;
}

std::vector<std::vector<int>> walk_cycles(const VoltageGraph& v) {
  const RibbonGraph& s = v.spine;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::vector<int>> out;
  for (int h = 0; h < s.size(); ++h) {
    if (seen[h]) continue;
    std::vector<int> c;
    for (int x = h; !seen[x]; x = s.next_at_vertex[s.opposite[x]]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::int64_t walk_voltage(const VoltageGraph& v, const std::vector<int>& cycle) {
  std::int64_t w = 0;
  for (int h : cycle) {
    int back = v.spine.opposite[h];
    w += v.voltage[h] + (v.tips.count(back) ? 1 : v.wrap[back]);
  }
  return mod(w, v.n);
}

GraphAutomorphism derived_graph(const VoltageGraph& v) {
  const RibbonGraph& s = v.spine;
  const std::int64_t n = v.n;
  const int N = static_cast<int>(s.size() * n);
  auto id = [n](int h, std::int64_t x) { return static_cast<int>(h * n + mod(x, n)); };
  RibbonGraph g;
  g.opposite.resize(N);
  g.next_at_vertex.resize(N);
  g.length.resize(N);
  std::vector<int> perm(N);
  for (int h = 0; h < s.size(); ++h)
    for (std::int64_t x = 0; x < n; ++x) {
      int d = id(h, x);
      g.opposite[d] = id(s.opposite[h], x + v.voltage[h]);
      g.next_at_vertex[d] = v.tips.count(h) ? d : id(s.next_at_vertex[h], x + v.wrap[h]);
      g.length[d] = s.length[h];
      perm[d] = id(h, x + 1);
      if (v.tips.count(h)) {
        g.P.insert(d);
        g.sigma[d] = id(h, x + 1);
      }
    }
  return {g, perm, permutation_order(perm)};
}

std::vector<std::int64_t> cycle_voltages(const HorizontalClass& h) {
  std::vector<std::int64_t> out;
  for (auto p : h.p) {
    std::int64_t r = mod(p, h.q);
    std::int64_t k = std::gcd(r, h.q);
    std::int64_t rest = h.q / k;
    out.push_back(rest == 1 ? 0 : k * inverse_mod(r / k, rest));
  }
  return out;
}

std::vector<std::int64_t> cone_voltages(const HandyModel& m, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& [p, alpha] : m.torus_types) out.push_back(n / alpha * inverse_mod(p, alpha));
  return out;
}

namespace {

struct Builder {
  std::int64_t n;
  std::vector<int> opp;
  std::vector<std::int64_t> volt, wrap;
  std::vector<std::vector<int>> rot;
  std::set<int> tips;
  std::vector<char> dead;

  int vertex() {
    rot.emplace_back();
    return static_cast<int>(rot.size()) - 1;
  }

  int edge(std::int64_t v) {
    int h = static_cast<int>(opp.size());
    opp.insert(opp.end(), {h + 1, h});
    volt.insert(volt.end(), {mod(v, n), mod(-v, n)});
    wrap.insert(wrap.end(), {0, 0});
    dead.insert(dead.end(), {0, 0});
    return h;
  }

  // A path of j vertices, each carrying one P hair. Returns the half-edge
  // that must be placed at the anchoring vertex.
  int chain(int j) {
    int anchor = edge(0);
    int in = anchor + 1;
    for (int i = 0; i < j; ++i) {
      int w = vertex();
      rot[w].push_back(in);
      int hair = edge(0);
      rot[w].push_back(hair);
      int tip = vertex();
      rot[tip].push_back(hair + 1);
      tips.insert(hair + 1);
      if (i + 1 < j) {
        int e = edge(0);
        rot[w].push_back(e);
        in = e + 1;
      }
    }
    return anchor;
  }

  // Removes a bivalent vertex, merging its two edges.
  bool smooth(int x) {
    if (rot[x].size() != 2) return false;
    int u = rot[x][0], w = rot[x][1];
    if (opp[u] == w || wrap[u] || wrap[w]) return false;
    int a = opp[u], b = opp[w];
    volt[a] = mod(volt[a] + volt[w], n);
    volt[b] = mod(-volt[a], n);
    opp[a] = b;
    opp[b] = a;
    dead[u] = dead[w] = 1;
    rot[x].clear();
    return true;
  }

  VoltageGraph finish(std::vector<int>* renumbered = nullptr) const {
    std::vector<int> renum(opp.size(), -1);
    int count = 0;
    for (std::size_t h = 0; h < opp.size(); ++h)
      if (!dead[h]) renum[h] = count++;
    VoltageGraph v;
    v.n = n;
    v.spine.opposite.resize(count);
    v.spine.next_at_vertex.resize(count);
    v.spine.length.assign(count, Rational(1));
    v.voltage.resize(count);
    v.wrap.resize(count);
    for (std::size_t h = 0; h < opp.size(); ++h) {
      if (dead[h]) continue;
      v.spine.opposite[renum[h]] = renum[opp[h]];
      v.voltage[renum[h]] = volt[h];
      v.wrap[renum[h]] = wrap[h];
      if (tips.count(static_cast<int>(h))) v.tips.insert(renum[h]);
    }
    for (const auto& r : rot)
      for (std::size_t i = 0; i < r.size(); ++i) v.spine.next_at_vertex[renum[r[i]]] = renum[r[(i + 1) % r.size()]];
    if (renumbered) *renumbered = renum;
    return v;
  }
};

struct Shape {
  std::vector<std::int64_t> genus;  // a_1, b_1, ..., a_g, b_g
  std::vector<std::int64_t> loops;  // d_1, ..., d_{r-1}
  std::vector<int> inner_chain;     // P hairs inside each loop
  int outer_chain = 0;
  bool cones_on_loop = false;       // special points sit on the first loop
  std::vector<int> wrap_side;       // for cones on the loop: which corner turns
};

// Wedge of circles at a core vertex with the special points attached.
// inside receives, per loop, the half-edge running along the loop's inner side.
VoltageGraph build_spine(const Shape& s, const std::vector<std::int64_t>& lambda, std::int64_t n,
                         std::vector<int>* inside = nullptr) {
  std::vector<int> returns;
  Builder b{n, {}, {}, {}, {}, {}, {}};
  int core = b.vertex();
  for (std::size_t j = 0; j + 1 < s.genus.size(); j += 2) {
    int a = b.edge(s.genus[j]), c = b.edge(s.genus[j + 1]);
    for (int h : {a, c, a + 1, c + 1}) b.rot[core].push_back(h);
  }
  for (std::size_t k = 0; k < s.loops.size(); ++k) {
    int inner = s.inner_chain.size() > k && s.inner_chain[k] > 0 ? b.chain(s.inner_chain[k]) : -1;
    if (k == 0 && s.cones_on_loop && !lambda.empty()) {
      int first = b.edge(s.loops[0]);
      int prev = first;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        int x = b.vertex();
        int next = b.edge(0);
        b.rot[x] = {prev + 1, next};
        b.wrap[s.wrap_side.size() > i && s.wrap_side[i] ? next : prev + 1] = lambda[i];
        prev = next;
      }
      b.rot[core].push_back(first);
      if (inner >= 0) b.rot[core].push_back(inner);
      b.rot[core].push_back(prev + 1);
      returns.push_back(prev + 1);
      continue;
    }
    int c = b.edge(s.loops[k]);
    b.rot[core].push_back(c);
    if (inner >= 0) b.rot[core].push_back(inner);
    b.rot[core].push_back(c + 1);
    returns.push_back(c + 1);
  }
  if (!s.cones_on_loop || s.loops.empty())
    for (auto l : lambda) {
      int e = b.edge(0);
      b.rot[core].push_back(e);
      int x = b.vertex();
      b.rot[x].push_back(e + 1);
      b.wrap[e + 1] = l;
    }
  if (s.outer_chain > 0) {
    int anchor = b.chain(s.outer_chain);
    b.rot[core].push_back(anchor);
  }
  b.smooth(core);
  std::vector<int> renum;
  VoltageGraph v = b.finish(&renum);
  if (inside) {
    inside->clear();
    for (int h : returns) inside->push_back(renum[h]);
  }
  return v;
}

bool is_unit(std::int64_t w, std::int64_t n) { return std::gcd(mod(w, n), n) == 1; }

std::string describe(const VoltageGraph& v, const std::vector<std::vector<int>>& cycles,
                     const std::vector<Rational>& target) {
  std::string out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::map<int, int> count;
    for (int h : cycles[i]) ++count[v.spine.edge_id(h)];
    std::string row;
    for (const auto& [e, c] : count) {
      if (!row.empty()) row += " + ";
      row += (c > 1 ? std::to_string(c) + "*" : std::string()) + "l" + std::to_string(e);
    }
    out += row + " = " + to_string(target[i]) + "\n";
  }
  out += "l_e > 0 for every edge\n";
  return out;
}

// Edge lengths with the given cycle sums, maximizing the shortest edge.
bool solve_lengths(VoltageGraph& v, const std::vector<std::vector<int>>& cycles,
                   const std::vector<Rational>& target) {
  std::vector<int> edges = v.spine.edges();
  std::map<int, int> col;
  for (std::size_t i = 0; i < edges.size(); ++i) col[edges[i]] = static_cast<int>(i);
  const Eigen::Index E = static_cast<Eigen::Index>(edges.size()), F = static_cast<Eigen::Index>(cycles.size());
  DenseMatrix<Rational> A = DenseMatrix<Rational>::Zero(F + E, 2 * E + 1);
  DenseVector<Rational> rhs = DenseVector<Rational>::Zero(F + E);
  DenseVector<Rational> obj = DenseVector<Rational>::Zero(2 * E + 1);
  for (Eigen::Index i = 0; i < F; ++i) {
    for (int h : cycles[i]) A(i, col[v.spine.edge_id(h)]) += 1;
    rhs(i) = target[i];
  }
  for (Eigen::Index e = 0; e < E; ++e) {
    A(F + e, e) = 1;
    A(F + e, E) = -1;
    A(F + e, E + 1 + e) = -1;
  }
  obj(E) = 1;
  auto x = simplex_maximize<Rational>(A, rhs, obj);
  if (!x || (*x)(E) <= 0) return false;
  for (Eigen::Index e = 0; e < E; ++e) {
    Rational l = (*x)(e);
    l.canonicalize();
    v.spine.length[edges[e]] = l;
    v.spine.length[v.spine.opposite[edges[e]]] = l;
  }
  return true;
}

bool verified(const GraphAutomorphism& d) {
  try {
    validate(d.graph);
    if (!is_connected(d.graph) || !check_tat(d.graph).ok) return false;
    GraphAutomorphism t = tat_map(d.graph);
    return t.graph.size() == d.graph.size() && t.perm == d.perm;
  } catch (const Error&) {
    return false;
  }
}

struct Search {
  std::int64_t n;
  int attempts = 0;
  std::string last_system;

  // Tries the spine with every cycle sum pinned to a lap count c + J n.
  std::optional<Realization> attempt(VoltageGraph v, const std::string& layout) {
    auto cycles = walk_cycles(v);
    std::vector<std::int64_t> c;
    for (const auto& cyc : cycles) {
      std::int64_t w = walk_voltage(v, cyc);
      if (!is_unit(w, n)) return std::nullopt;
      std::int64_t inv = n == 1 ? 1 : inverse_mod(w, n);
      c.push_back(inv == 0 ? n : inv);
    }
    const std::size_t F = cycles.size();
    std::vector<std::vector<std::int64_t>> plans{std::vector<std::int64_t>(F, 0)};
    for (std::size_t big = 0; big < F && F > 1; ++big) {
      std::vector<std::int64_t> J(F, 0);
      for (std::size_t i = 0; i < F; ++i)
        if (i != big)
          while (c[i] + J[i] * n <= static_cast<std::int64_t>(F - 1) * c[big]) ++J[i];
      plans.push_back(J);
    }
    for (const auto& J : plans) {
      ++attempts;
      std::vector<Rational> target;
      for (std::size_t i = 0; i < F; ++i) target.push_back(Rational(1, c[i] + J[i] * n));
      last_system = layout + "\n" + describe(v, cycles, target);
      if (!solve_lengths(v, cycles, target)) continue;
      GraphAutomorphism d = derived_graph(v);
      if (!verified(d)) continue;
      return Realization{d.graph, d, v, layout, attempts};
    }
    return std::nullopt;
  }
};

// Odometer over vectors with entries in [0, base).
bool advance(std::vector<std::int64_t>& t, std::int64_t base) {
  for (auto& x : t) {
    if (++x < base) return true;
    x = 0;
  }
  return false;
}

void check_euler(const SeifertFibering& f) {
  if (!f.boundary_pairs) return;
  std::vector<SeifertPair> all = normalize(f).pairs;
  all.insert(all.end(), f.boundary_pairs->begin(), f.boundary_pairs->end());
  euler_b(all);
}

std::int64_t cover_order(const HandyModel& m, const HorizontalClass& h) {
  if (h.q < 1) throw std::invalid_argument("q must be positive");
  if (static_cast<int>(h.p.size()) != m.circles)
    throw std::invalid_argument("class has " + std::to_string(h.p.size()) + " entries, base needs " +
                                std::to_string(m.circles));
  std::int64_t lcm = 1;
  for (const auto& s : m.pairs) lcm = std::lcm(lcm, s.alpha);
  return h.q * lcm;
}

Shape plain_shape(const HandyModel& m, const std::vector<std::int64_t>& w) {
  Shape s;
  s.genus.assign(w.begin(), w.begin() + 2 * m.g);
  s.loops.assign(w.begin() + 2 * m.g, w.end());
  s.inner_chain.assign(s.loops.size(), 0);
  return s;
}

}  // namespace

Lambda build_lambda(const SeifertFibering& f, const HorizontalClass& h, bool allow_copies) {
  HandyModel m = handy_model(f);
  check_euler(f);
  Lambda l;
  l.spine.n = cover_order(m, h);
  l.copies = component_count(h);
  if (l.copies > 1 && !allow_copies) throw ReducibleClass(static_cast<int>(l.copies));
  if (m.spine_is_point()) {
    l.point = true;
    return l;
  }
  l.spine = build_spine(plain_shape(m, cycle_voltages(h)), cone_voltages(m, l.spine.n), l.spine.n);
  l.map = derived_graph(l.spine);
  return l;
}

MonodromyReport monodromy_report(const Lambda& l) {
  MonodromyReport r;
  if (l.point) {
    r.orbit_sizes = {1};
    r.rotations = {Rational(0)};
    r.forward_fractions = {Rational(0)};
    return r;
  }
  const RibbonGraph& g = l.map.graph;
  // One component: the copies are isomorphic.
  std::vector<char> in(g.size(), 0);
  std::vector<int> stack{0};
  in[0] = 1;
  while (!stack.empty()) {
    int h = stack.back();
    stack.pop_back();
    for (int x : {g.opposite[h], g.next_at_vertex[h]})
      if (!in[x]) {
        in[x] = 1;
        stack.push_back(x);
      }
  }
  auto vid = g.vertex_ids();
  std::set<int> verts;
  long long half = 0;
  for (int h = 0; h < g.size(); ++h)
    if (in[h]) {
      verts.insert(vid[h]);
      ++half;
    }
  int bnd = 0;
  for (const auto& f : faces(g))
    if (in[f.half_edges[0]]) ++bnd;
  long long chi = static_cast<long long>(verts.size()) - half / 2;
  r.boundary_count = bnd;
  r.genus = static_cast<int>((2 - chi - bnd) / 2);
  for (const auto& b : boundary_rotation(l.map)) {
    r.orbit_sizes.push_back(b.orbit_size);
    r.rotations.push_back(b.rotation);
    r.forward_fractions.push_back(b.forward_fraction);
  }
  return r;
}

Realization realize_tat(const SeifertFibering& f, const HorizontalClass& h) {
  HandyModel m = handy_model(f);
  check_euler(f);
  const std::int64_t n = cover_order(m, h);
  if (auto c = component_count(h); c > 1) throw ReducibleClass(static_cast<int>(c));
  if (m.spine_is_point()) {
    if (m.pairs.empty()) {
      RibbonGraph loop = catalog::circle(1);
      return Realization{loop, identity_automorphism(loop), {}, "loop", 0};
    }
    throw Infeasible("disk with one special fiber: the spine is a single point\n");
  }
  const auto w = cycle_voltages(h);
  const auto lambda = cone_voltages(m, n);
  const std::int64_t lifts = n / h.q;
  const int loops = m.r - 1;
  Search search{n, 0, {}};
  constexpr int kBuildCap = 20000;

  // Special points strung along the first boundary circle.
  if (loops > 0 && !lambda.empty()) {
    std::vector<std::int64_t> t(loops, 0);
    int builds = 0, tries = 0;
    do {
      for (int bits = 0; bits < (1 << lambda.size()) && builds < kBuildCap && tries < 16; ++bits) {
        Shape s = plain_shape(m, w);
        for (int k = 0; k < loops; ++k) s.loops[k] += h.q * t[k];
        s.cones_on_loop = true;
        for (std::size_t i = 0; i < lambda.size(); ++i) s.wrap_side.push_back((bits >> i) & 1);
        VoltageGraph v = build_spine(s, lambda, n);
        ++builds;
        bool units = true;
        for (const auto& cyc : walk_cycles(v)) units = units && is_unit(walk_voltage(v, cyc), n);
        if (!units) continue;
        ++tries;
        if (auto r = search.attempt(v, "circle")) return *r;
      }
    } while (builds < kBuildCap && tries < 16 && advance(t, lifts));
  }

  // Special points on hairs at the core vertex.
  {
    std::vector<std::int64_t> t(loops, 0);
    int builds = 0;
    do {
      Shape s = plain_shape(m, w);
      for (int k = 0; k < loops; ++k) s.loops[k] += h.q * t[k];
      VoltageGraph v = build_spine(s, lambda, n);
      ++builds;
      bool units = true;
      for (const auto& cyc : walk_cycles(v)) units = units && is_unit(walk_voltage(v, cyc), n);
      if (!units) continue;
      if (auto r = search.attempt(v, "wedge")) return *r;
      break;
    } while (builds < kBuildCap && advance(t, lifts));
  }

  // P hairs make every cycle voltage a unit.
  {
    Shape s = plain_shape(m, w);
    std::vector<int> inside;
    VoltageGraph v = build_spine(s, lambda, n, &inside);
    auto cycles = walk_cycles(v);
    std::vector<std::int64_t> need(loops, 0);
    std::int64_t outer = 0;
    const bool extras = m.g > 0 || !lambda.empty();
    for (const auto& cyc : cycles) {
      std::int64_t wv = walk_voltage(v, cyc);
      int loop = -1;
      for (int k = 0; k < loops; ++k)
        if (std::find(cyc.begin(), cyc.end(), inside[k]) != cyc.end()) loop = k;
      std::int64_t j = loop < 0 && !extras ? 1 : 0;
      while (!is_unit(wv + j, n)) ++j;
      if (loop >= 0)
        need[loop] = j;
      else
        outer = j;
    }
    s.inner_chain.assign(need.begin(), need.end());
    s.outer_chain = static_cast<int>(outer);
    if (auto r = search.attempt(build_spine(s, lambda, n), "wedge with P hairs")) return *r;
  }
  throw Infeasible(search.last_system);
}

}  // namespace tat
