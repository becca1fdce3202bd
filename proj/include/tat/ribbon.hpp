#pragma once

#include <map>
#include <set>
#include <vector>

#include "tat/errors.hpp"
#include "tat/rational.hpp"

namespace tat {

// Half-edges are 0..N-1. An edge is named by its smaller half-edge, a vertex
// by the smallest half-edge of its nu-cycle. Lengths are in units of pi and
// stored per half-edge (both halves of an edge carry the same value).
struct RibbonGraph {
  std::vector<int> opposite;
  std::vector<int> next_at_vertex;
  std::vector<Rational> length;
  std::set<int> P;
  std::map<int, int> sigma;

  int size() const { return static_cast<int>(opposite.size()); }
  int edge_id(int h) const { return std::min(h, opposite[h]); }

  // Vertex id of every half-edge, recomputed from next_at_vertex.
  std::vector<int> vertex_ids() const;
  std::vector<int> vertices() const;
  std::vector<int> edges() const;
  int valency(int v) const;
  Rational total_length() const;
};

void validate(const RibbonGraph& g);

struct FaceCycle {
  std::vector<int> half_edges;
  Rational total_length;
};

// Half-edges of the erased graph (P-vertices and their edges removed).
std::vector<bool> erased_support(const RibbonGraph& g);

// nu on the erased graph: skips half-edges leading to P.
std::vector<int> erased_next(const RibbonGraph& g);

std::vector<FaceCycle> faces(const RibbonGraph& g);

struct SurfaceInvariants {
  int genus;
  int boundary_count;
  int euler_characteristic;
  bool operator==(const SurfaceInvariants&) const = default;
};

bool is_connected(const RibbonGraph& g);

SurfaceInvariants surface_invariants(const RibbonGraph& g);

// Splits the edge of half-edge h at distance offset from the vertex of h.
// The new vertex is made of half-edges N (towards h) and N+1.
RibbonGraph subdivide(const RibbonGraph& g, int h, const Rational& offset);

}  // namespace tat
