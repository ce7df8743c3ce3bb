#pragma once

#include "seaweed/meander.hpp"
#include "seaweed/rank.hpp"

namespace seaweed {

// Beta vectors of one side, one row per sigma-orbit of arcs (sigma-paired
// arcs carry equal beta; A families have trivial orbits).
std::vector<RootVector> beta_rows(const MeanderGraph& g, Side side);

IntMatrix rows_to_matrix(const std::vector<RootVector>& rows);

// Rank-formula index: |simple roots| + rk(outer) + rk(inner) - 2 rk(both).
long long tyj_index(const MeanderGraph& g);

}  // namespace seaweed
