#pragma once

#include <cstdint>
#include <vector>

#include "tat/quotient.hpp"

namespace tat {

// A cycle is a closed walk of directed half-edges of the orbit graph; half-edge
// h is traversed from its own vertex to the vertex of opposite[h].
using EdgeCycle = std::vector<int>;

// Spanning-tree fundamental cycles. Tree edges are picked greedily in the
// order given by priority (edge ids); the default is ascending edge id.
std::vector<EdgeCycle> fundamental_cycles(const OrbitGraph& orbit, const std::vector<int>& priority = {});

struct HorizontalClass {
  std::int64_t q = 1;
  std::vector<std::int64_t> p;
  std::vector<EdgeCycle> basis;
};

HorizontalClass horizontal_class(const GraphAutomorphism& a, const std::vector<BranchPoint>& branch,
                                 const OrbitGraph& orbit, const std::vector<int>& priority = {});

std::int64_t component_count(const HorizontalClass& c);

}  // namespace tat
