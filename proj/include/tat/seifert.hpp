#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

#include "tat/errors.hpp"
#include "tat/rational.hpp"

namespace tat {

struct SeifertPair {
  std::int64_t alpha;
  std::int64_t beta;
  auto operator<=>(const SeifertPair&) const = default;
};

// boundary_pairs, when present, holds one capping pair per boundary
// component (alpha = 1 for a plain arrowhead).
struct SeifertFibering {
  int g = 0;
  int r = 0;
  std::vector<SeifertPair> pairs;
  std::optional<std::int64_t> b;
  std::optional<std::vector<SeifertPair>> boundary_pairs;
};

struct PlumbingGraph {
  std::int64_t central_e = 0;
  int central_g = 0;
  std::vector<std::vector<std::int64_t>> bamboos;
  int arrows = 0;
  // One chain per arrowhead; an empty chain is an arrow on the central vertex.
  std::optional<std::vector<std::vector<std::int64_t>>> arrow_bamboos;
};

SeifertPair pair_from_rotation(std::int64_t k, std::int64_t p);

bool is_normalized(const SeifertPair& s);

// Returns (p, alpha): the pair lives over a (p, alpha)-solid torus.
std::pair<std::int64_t, std::int64_t> torus_type(const SeifertPair& s);

std::int64_t euler_b(const std::vector<SeifertPair>& pairs);

std::vector<std::int64_t> cont_frac(std::int64_t alpha, std::int64_t beta);

Rational eval_cont_frac(const std::vector<std::int64_t>& chain);

using GluingMatrix = Eigen::Matrix<long long, 2, 2>;

enum class GluingCase { NodeToNode, NodeToDisk };

GluingMatrix gluing_matrix(const std::vector<std::int64_t>& chain, GluingCase c);

// Shifts every beta into [0, alpha), moving the integer parts into b.
SeifertFibering normalize(const SeifertFibering& f);

PlumbingGraph plumbing_from_fibering(const SeifertFibering& f);

SeifertFibering fibering_from_plumbing(const PlumbingGraph& p);

}  // namespace tat
