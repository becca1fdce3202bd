#pragma once

#include "tat/ribbon.hpp"

namespace tat::catalog {

// One vertex, one loop.
RibbonGraph circle(const Rational& length);

// Two vertices joined by three edges with planar cyclic orders.
RibbonGraph theta(const Rational& length);

// K_{m,n}: a_i has cyclic order b_0, b_1, ...; b_j has cyclic order a_{m-1}, ..., a_0.
// Half-edge 2(i n + j) sits at a_i, its opposite 2(i n + j) + 1 at b_j.
RibbonGraph complete_bipartite(int m, int n, const Rational& length);

}  // namespace tat::catalog
