#pragma once

#include "json.hpp"
#include <string>

#include "tat/horizontal.hpp"
#include "tat/inverse.hpp"
#include "tat/seifert.hpp"

namespace tat {

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

nlohmann::json graph_to_json(const RibbonGraph& g);
RibbonGraph graph_from_json(const nlohmann::json& j);

nlohmann::json plumbing_to_json(const PlumbingGraph& p);
PlumbingGraph plumbing_from_json(const nlohmann::json& j);

nlohmann::json class_to_json(const HorizontalClass& h);
HorizontalClass class_from_json(const nlohmann::json& j);

// "p1,...,pk,q"
HorizontalClass parse_class(const std::string& text);

std::string to_text(const nlohmann::json& j);
nlohmann::json parse_text(const std::string& text);

std::string graph_dot(const RibbonGraph& g);
std::string plumbing_dot(const PlumbingGraph& p);

// The forward direction on a tete-a-tete graph.
struct Monodromy {
  GraphAutomorphism map;
  std::vector<BranchPoint> branch;
  std::vector<BoundaryRotation> boundary;
  OrbitGraph orbit;
  SeifertFibering fibering;
  PlumbingGraph plumbing;
  HorizontalClass cls;
};

Monodromy read_monodromy(const RibbonGraph& g);

// Plumbing data compared by genus, arrows, sorted bamboos; e too when r = 0.
bool same_normalized_plumbing(const PlumbingGraph& a, const PlumbingGraph& b);

// Same q, and p = +-p' for one cycle, same gcd with q otherwise.
bool same_class_up_to_basis(const HorizontalClass& a, const HorizontalClass& b);

}  // namespace tat
