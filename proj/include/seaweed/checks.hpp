#pragma once

#include "seaweed/meander.hpp"

namespace seaweed {

// Structural invariants of a freshly built graph: degree bounds, component
// shapes, reflection equivariance and the per-arc shadow arithmetic.
// Throws InvariantViolation with a diagnostic on the first failure.
void check_graph_invariants(const MeanderGraph& g,
                            const std::vector<Component>& comps);

// Rank-level invariants: per-side independence of the beta rows, segment
// independence, and the signed cycle sums landing in Z*delta with the
// right parity.
void check_rank_invariants(const MeanderGraph& g,
                           const std::vector<Component>& comps);

// Symmetries of the index itself: swapping the cut sets, and (affine
// type A) rotating both cut sets by any amount.
void check_symmetry_invariants(const Flavor& fl, const CutPair& cuts,
                               long long expected_index);

}  // namespace seaweed
