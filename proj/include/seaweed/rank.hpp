#pragma once

#include <cstdint>
#include <vector>

namespace seaweed {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Rank over the rationals by fraction-free (Bareiss) elimination.  Runs in
// checked 64-bit arithmetic and restarts with arbitrary-precision integers
// if an intermediate minor would overflow.  Never touches floating point.
int rank_exact(IntMatrix m);

}  // namespace seaweed
