#pragma once

#include "seaweed/index.hpp"

namespace seaweed {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct PipelineOptions {
  bool with_tyj = true;
  bool with_brute = false;
  int trials = 5;
  std::uint64_t seed = kDefaultSeed;
};

// Rotates affine cuts as needed, realizes the seaweed and runs the
// skew-form rank sampler.  A families only.
long long brute_index_for(const Flavor& fl, const CutPair& cuts, int trials,
                          std::uint64_t seed);

// Full run: graph, census, combinatorial index, plus the requested
// oracles.  A disagreeing brute value is retried once with 25 trials
// before being reported as a mismatch.
IndexReport compute_index(const Flavor& fl, const CutPair& cuts,
                          const PipelineOptions& opts = {});

}  // namespace seaweed
