#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "tat/io.hpp"

using namespace tat;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int cmd_check(const std::string& file, const std::string& json_out) {
  RibbonGraph g = graph_from_json(read_json(file));
  TatCheck c = check_tat(g);
  if (!c.ok) {
    std::cout << "not tat: safe walks disagree from directed edge " << c.counterexample->directed_edge
              << " at offset " << to_string(c.counterexample->offset) << "\n";
    return 1;
  }
  Monodromy m = read_monodromy(g);
  std::cout << "tat: yes\n";
  std::cout << "order: " << m.map.order << "\n";
  std::cout << "branch points:";
  for (const auto& b : m.branch) std::cout << " (" << b.k << ", " << to_string(Rational(b.p, b.k)) << ")";
  std::cout << "\n";
  for (const auto& b : m.boundary)
    std::cout << "boundary orbit of " << b.orbit_size << ": rotation " << to_string(b.rotation) << "\n";
  if (!json_out.empty()) emit(to_text(graph_to_json(m.map.graph)), json_out);
  return 0;
}

int cmd_tat2seifert(const std::string& file, const std::string& json_out) {
  RibbonGraph g = graph_from_json(read_json(file));
  if (!check_tat(g).ok) {
    std::cout << "not tat\n";
    return 1;
  }
  Monodromy m = read_monodromy(g);
  nlohmann::json j;
  j["plumbing"] = plumbing_to_json(m.plumbing);
  j["class"] = class_to_json(m.cls);
  emit(to_text(j), json_out);
  return 0;
}

int cmd_seifert2tat(const std::string& file, const std::string& cls, bool dot, const std::string& json_out) {
  PlumbingGraph p = plumbing_from_json(read_json(file));
  SeifertFibering f = fibering_from_plumbing(p);
  HorizontalClass h = parse_class(cls);
  std::int64_t copies = component_count(h);
  if (copies > 1) {
    std::cerr << "warning: the class has " << copies << " components; building the irreducible part\n";
    h.q /= copies;
    for (auto& x : h.p) x /= copies;
  }
  Realization r = realize_tat(f, h);
  if (copies > 1) std::cerr << "copies: " << copies << "\n";
  std::string text = to_text(graph_to_json(r.graph));
  if (!json_out.empty()) emit(text, json_out);
  if (dot)
    std::cout << graph_dot(r.graph);
  else if (json_out.empty())
    std::cout << text;
  return 0;
}

int cmd_dot(const std::string& file) {
  nlohmann::json j = read_json(file);
  if (j.is_object() && j.contains("central"))
    std::cout << plumbing_dot(plumbing_from_json(j));
  else
    std::cout << graph_dot(graph_from_json(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tete-a-tete graphs and Seifert fiberings"};
  app.require_subcommand(1);
  std::string file, json_out, cls;
  bool dot = false;

  auto* check = app.add_subcommand("check", "check the tete-a-tete property and report the monodromy");
  check->add_option("graph", file, "graph JSON")->required();
  check->add_option("--json-out", json_out, "write the subdivided graph here");

  auto* t2s = app.add_subcommand("tat2seifert", "plumbing graph and horizontal class of a tete-a-tete graph");
  t2s->add_option("graph", file, "graph JSON")->required();
  t2s->add_option("--json-out", json_out, "write the result here");

  auto* s2t = app.add_subcommand("seifert2tat", "tete-a-tete graph realizing a plumbing and class");
  s2t->add_option("plumbing", file, "plumbing JSON")->required();
  s2t->add_option("--class", cls, "p1,...,pk,q")->required();
  s2t->add_flag("--dot", dot, "print DOT instead of JSON");
  s2t->add_option("--json-out", json_out, "write the graph JSON here");

  auto* d = app.add_subcommand("dot", "DOT rendering of a graph or plumbing file");
  d->add_option("file", file, "graph or plumbing JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(file, json_out);
    if (*t2s) return cmd_tat2seifert(file, json_out);
    if (*s2t) return cmd_seifert2tat(file, cls, dot, json_out);
    return cmd_dot(file);
  } catch (const NotTat& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Infeasible& e) {
    std::cerr << e.what();
    return 1;
  } catch (const NotAutomorphism& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
