#pragma once

#include <optional>
#include <vector>

#include "tat/ribbon.hpp"

namespace tat {

// A point on directed edge d at distance offset from the vertex of d.
struct GraphPoint {
  int directed_edge;
  Rational offset;
};

// Orientation-free name of a point: a vertex id, or an edge id with the
// offset measured from the edge's smaller half-edge.
struct Location {
  bool at_vertex;
  int id;
  Rational offset;
  bool operator==(const Location&) const = default;
};

Location locate(const RibbonGraph& g, const GraphPoint& p);

enum class Direction { Forward, Backward };

struct WalkResult {
  GraphPoint endpoint;
  std::vector<int> itinerary;
  std::vector<int> sigma_jumps;
};

WalkResult safe_walk(const RibbonGraph& g, const GraphPoint& start, Direction dir);

struct TatCheck {
  bool ok;
  std::optional<GraphPoint> counterexample;
};

TatCheck check_tat(const RibbonGraph& g);

// perm acts on the half-edges (directed edges) of graph.
struct GraphAutomorphism {
  RibbonGraph graph;
  std::vector<int> perm;
  int order;
};

GraphAutomorphism tat_map(const RibbonGraph& g);

GraphAutomorphism identity_automorphism(const RibbonGraph& g);

int permutation_order(const std::vector<int>& perm);

std::vector<int> compose_power(const std::vector<int>& perm, long long k);

// Checks that perm commutes with iota and nu and preserves lengths and P.
bool is_ribbon_automorphism(const RibbonGraph& g, const std::vector<int>& perm);

struct BoundaryRotation {
  std::vector<int> orbit;  // indices into faces(graph)
  int orbit_size;
  Rational rotation;          // in [0, 1)
  Rational signed_rotation;   // in (-1/2, 1/2]
  Rational forward_fraction;  // shift along the face direction / face length
};

std::vector<BoundaryRotation> boundary_rotation(const GraphAutomorphism& a);

}  // namespace tat
