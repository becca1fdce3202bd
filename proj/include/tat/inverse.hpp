#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tat/horizontal.hpp"
#include "tat/seifert.hpp"
#include "tat/tat_core.hpp"

namespace tat {

struct HandyModel {
  int g = 0;
  int r = 1;
  std::vector<SeifertPair> pairs;                                   // normalized, alpha > 1
  std::vector<std::pair<std::int64_t, std::int64_t>> torus_types;  // (p_i, alpha_i)
  std::vector<int> arc_order;  // branch images in order along the first boundary
  int circles = 0;             // 2g + r - 1
  bool spine_is_point() const { return circles == 0 && pairs.size() <= 1; }
};

HandyModel handy_model(const SeifertFibering& f);

// A ribbon graph with Z_n voltages. Walking into h and turning to
// next_at_vertex[h] changes sheet by wrap[h]; crossing h changes it by
// voltage[h]. Half-edges in tips are univalent P vertices whose sigma is
// the deck shift.
struct VoltageGraph {
  RibbonGraph spine;
  std::int64_t n = 1;
  std::vector<std::int64_t> voltage;
  std::vector<std::int64_t> wrap;
  std::set<int> tips;
};

// Closed walks h -> next_at_vertex[opposite[h]] of the spine.
std::vector<std::vector<int>> walk_cycles(const VoltageGraph& v);
// Sheet change around a walk cycle; a tip counts +1.
std::int64_t walk_voltage(const VoltageGraph& v, const std::vector<int>& cycle);

// Half-edge (h, x) gets id h*n + x; the automorphism is x -> x + 1.
GraphAutomorphism derived_graph(const VoltageGraph& v);

// Class value in Z_q carried by each basis cycle.
std::vector<std::int64_t> cycle_voltages(const HorizontalClass& h);
std::vector<std::int64_t> cone_voltages(const HandyModel& m, std::int64_t n);

struct Lambda {
  bool point = false;  // the spine is a point; graph is empty
  GraphAutomorphism map;
  VoltageGraph spine;
  std::int64_t copies = 1;
};

Lambda build_lambda(const SeifertFibering& f, const HorizontalClass& h, bool allow_copies = false);

struct MonodromyReport {
  int genus = 0;
  int boundary_count = 1;
  std::vector<int> orbit_sizes;
  std::vector<Rational> rotations;
  std::vector<Rational> forward_fractions;
};

MonodromyReport monodromy_report(const Lambda& l);

struct Realization {
  RibbonGraph graph;
  GraphAutomorphism map;
  VoltageGraph spine;
  std::string layout;
  int attempts = 0;
};

Realization realize_tat(const SeifertFibering& f, const HorizontalClass& h);

}  // namespace tat
