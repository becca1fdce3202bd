#include "tat/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tat {

using nlohmann::json;

namespace {

std::vector<int> int_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<int> out;
  for (const auto& x : j.at(key)) {
    if (!x.is_number_integer()) throw ParseError(std::string("non-integer in '") + key + "'");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

json graph_to_json(const RibbonGraph& g) {
  json j;
  j["half_edges"] = g.size();
  j["opposite"] = g.opposite;
  j["next_at_vertex"] = g.next_at_vertex;
  json lengths = json::object();
  for (int e : g.edges()) lengths[std::to_string(e)] = to_string(g.length[e]);
  j["lengths"] = lengths;
  j["P"] = std::vector<int>(g.P.begin(), g.P.end());
  json sigma = json::array();
  for (auto [from, to] : g.sigma) sigma.push_back({from, to});
  j["sigma"] = sigma;
  return j;
}

RibbonGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph must be an object");
  RibbonGraph g;
  g.opposite = int_array(j, "opposite");
  g.next_at_vertex = int_array(j, "next_at_vertex");
  const int n = static_cast<int>(g.opposite.size());
  if (j.contains("half_edges") && j.at("half_edges") != n) throw ParseError("half_edges disagrees with opposite");
  if (static_cast<int>(g.next_at_vertex.size()) != n) throw ParseError("array sizes differ");
  for (int x : g.opposite)
    if (x < 0 || x >= n) throw ParseError("opposite entry out of range");
  if (!j.contains("lengths") || !j.at("lengths").is_object()) throw ParseError("missing object 'lengths'");
  g.length.assign(n, Rational(0));
  std::vector<char> given(n, 0);
  for (const auto& [key, val] : j.at("lengths").items()) {
    int e = -1;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) e = -1;
    } catch (const std::exception&) {
    }
    if (e < 0 || e >= n) throw ParseError("bad edge id '" + key + "'");
    if (!val.is_string()) throw ParseError("length of edge " + key + " must be a \"num/den\" string");
    Rational l;
    try {
      l = parse_rational(val.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad length '" + val.get<std::string>() + "'");
    }
    g.length[e] = l;
    g.length[g.opposite[e]] = l;
    given[e] = given[g.opposite[e]] = 1;
  }
  for (int h = 0; h < n; ++h)
    if (!given[h]) throw ParseError("no length for half-edge " + std::to_string(h));
  if (j.contains("P"))
    for (int v : int_array(j, "P")) g.P.insert(v);
  if (j.contains("sigma")) {
    if (!j.at("sigma").is_array()) throw ParseError("'sigma' must be an array of pairs");
    for (const auto& p : j.at("sigma")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw ParseError("'sigma' must be an array of pairs");
      g.sigma[p[0].get<int>()] = p[1].get<int>();
    }
  }
  validate(g);
  return g;
}

json plumbing_to_json(const PlumbingGraph& p) {
  json j;
  j["central"] = {{"e", p.central_e}, {"g", p.central_g}};
  j["bamboos"] = p.bamboos;
  j["arrows"] = p.arrows;
  if (p.arrow_bamboos) j["arrow_bamboos"] = *p.arrow_bamboos;
  return j;
}

PlumbingGraph plumbing_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("plumbing must be an object");
  PlumbingGraph p;
  try {
    p.central_e = j.at("central").at("e").get<std::int64_t>();
    p.central_g = j.at("central").value("g", 0);
    p.bamboos = j.value("bamboos", std::vector<std::vector<std::int64_t>>{});
    p.arrows = j.value("arrows", 0);
    if (j.contains("arrow_bamboos")) p.arrow_bamboos = j.at("arrow_bamboos").get<std::vector<std::vector<std::int64_t>>>();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return p;
}

json class_to_json(const HorizontalClass& h) { return {{"q", h.q}, {"p", h.p}}; }

HorizontalClass class_from_json(const json& j) {
  HorizontalClass h;
  try {
    h.q = j.at("q").get<std::int64_t>();
    h.p = j.at("p").get<std::vector<std::int64_t>>();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return h;
}

HorizontalClass parse_class(const std::string& text) {
  std::vector<std::int64_t> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stoll(item, &used));
      if (used != item.size()) throw ParseError("bad class entry '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad class entry '" + item + "'");
    }
  }
  if (xs.empty()) throw ParseError("empty class");
  HorizontalClass h;
  h.q = xs.back();
  xs.pop_back();
  if (h.q < 1) throw ParseError("q must be positive");
  h.p = xs;
  return h;
}

std::string to_text(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string graph_dot(const RibbonGraph& g) {
  auto vid = g.vertex_ids();
  std::ostringstream out;
  out << "graph tat {\n";
  for (int v : g.vertices())
    out << "  v" << v << " [label=\"" << v << "\"" << (g.P.count(v) ? ", shape=box" : "") << "];\n";
  for (int e : g.edges())
    out << "  v" << vid[e] << " -- v" << vid[g.opposite[e]] << " [label=\"" << to_string(g.length[e]) << "\"];\n";
  for (auto [from, to] : g.sigma)
    if (from != to) out << "  v" << from << " -- v" << to << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string plumbing_dot(const PlumbingGraph& p) {
  std::ostringstream out;
  out << "graph plumbing {\n";
  out << "  c [label=\"" << p.central_e << (p.central_g ? " [" + std::to_string(p.central_g) + "]" : "") << "\"];\n";
  for (std::size_t i = 0; i < p.bamboos.size(); ++i) {
    std::string prev = "c";
    for (std::size_t j = 0; j < p.bamboos[i].size(); ++j) {
      std::string node = "b" + std::to_string(i) + "_" + std::to_string(j);
      out << "  " << node << " [label=\"" << -p.bamboos[i][j] << "\"];\n";
      out << "  " << prev << " -- " << node << ";\n";
      prev = node;
    }
  }
  for (int a = 0; a < p.arrows; ++a) {
    std::string prev = "c";
    if (p.arrow_bamboos && a < static_cast<int>(p.arrow_bamboos->size()))
      for (std::size_t j = 0; j < (*p.arrow_bamboos)[a].size(); ++j) {
        std::string node = "a" + std::to_string(a) + "_" + std::to_string(j);
        out << "  " << node << " [label=\"" << -(*p.arrow_bamboos)[a][j] << "\"];\n";
        out << "  " << prev << " -- " << node << ";\n";
        prev = node;
      }
    out << "  arrow" << a << " [shape=point];\n";
    out << "  " << prev << " -- arrow" << a << " [arrowhead=normal, dir=forward];\n";
  }
  out << "}\n";
  return out.str();
}

Monodromy read_monodromy(const RibbonGraph& g) {
  Monodromy m;
  m.map = tat_map(g);
  m.branch = branch_points(m.map);
  m.boundary = boundary_rotation(m.map);
  m.orbit = orbit_graph(m.map);
  m.cls = horizontal_class(m.map, m.branch, m.orbit);
  SeifertFibering& f = m.fibering;
  f.g = m.orbit.base_genus;
  f.r = m.orbit.base_boundary;
  for (const auto& b : m.branch)
    if (b.k > 1) f.pairs.push_back(pair_from_rotation(b.k, b.p));
  std::sort(f.pairs.begin(), f.pairs.end(), [](const SeifertPair& a, const SeifertPair& b) {
    return a.alpha != b.alpha ? a.alpha > b.alpha : a.beta < b.beta;
  });
  std::vector<SeifertPair> caps;
  for (const auto& b : m.boundary) {
    std::int64_t k = m.map.order / b.orbit_size;
    Rational p = b.rotation * static_cast<long>(k);
    caps.push_back(pair_from_rotation(k, to_int64(p.get_num())));
  }
  f.boundary_pairs = caps;
  std::vector<SeifertPair> all = f.pairs;
  all.insert(all.end(), caps.begin(), caps.end());
  f.b = euler_b(all);
  m.plumbing = plumbing_from_fibering(f);
  return m;
}

bool same_normalized_plumbing(const PlumbingGraph& a, const PlumbingGraph& b) {
  auto sa = a.bamboos, sb = b.bamboos;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (a.central_g != b.central_g || a.arrows != b.arrows || sa != sb) return false;
  return a.arrows > 0 || a.central_e == b.central_e;
}

bool same_class_up_to_basis(const HorizontalClass& a, const HorizontalClass& b) {
  if (a.q != b.q || a.p.size() != b.p.size()) return false;
  if (a.p.size() == 1) {
    std::int64_t x = mod(a.p[0], a.q), y = mod(b.p[0], b.q);
    return x == y || x == mod(-y, a.q);
  }
  return component_count(a) == component_count(b);
}

}  // namespace tat
