#pragma once

#include <vector>

#include "tat/tat_core.hpp"

namespace tat {

struct OrbitGraph {
  RibbonGraph quotient;
  std::vector<int> projection;  // half-edge of the graph -> half-edge of quotient
  int base_genus;
  int base_boundary;
};

OrbitGraph orbit_graph(const GraphAutomorphism& a);

struct BranchPoint {
  int vertex;  // orbit representative in a.graph
  int k;       // isotropy order
  int s;       // order / k
  int p;       // local rotation p/k of a^s
};

std::vector<BranchPoint> branch_points(const GraphAutomorphism& a);

// chi(graph) == order * chi(quotient) - sum over branch points of (order - order/k).
bool riemann_hurwitz_holds(const GraphAutomorphism& a);

}  // namespace tat
