#include "seaweed/pipeline.hpp"

#include <algorithm>

#include "seaweed/liealg.hpp"
#include "seaweed/tyj.hpp"

namespace seaweed {

long long brute_index_for(const Flavor& fl, const CutPair& cuts, int trials,
                          std::uint64_t seed) {
  if (fl.family == Family::FiniteA)
    return brute_index(build_seaweed_finite_A(fl.rank, cuts), trials, seed);
  if (fl.family == Family::AffineA) {
    CutPair c = normalize_cuts(cuts);
    validate_cuts(fl, c);
    if (!std::binary_search(c.inner.begin(), c.inner.end(), 0))
      c = rotate_cuts(fl.rank, c, c.inner.front());
    return brute_index(build_seaweed_affine_A(fl.rank, c), trials, seed);
  }
  throw ValidationError("the structure-constant oracle covers the A families only, not " +
                        fl.describe());
}

IndexReport compute_index(const Flavor& fl, const CutPair& cuts,
                          const PipelineOptions& opts) {
  const MeanderGraph g = build_graph(fl, cuts);
  const auto comps = components(g);

  IndexReport rep;
  rep.flavor = fl;
  rep.cuts = g.cuts;
  rep.census = take_census(fl, comps);
  rep.iota = iota_correction(comps);
  rep.combinatorial = combinatorial_index(fl, comps);
  if (opts.with_tyj) rep.tyj = tyj_index(g);
  if (opts.with_brute) {
    rep.brute = brute_index_for(fl, g.cuts, opts.trials, opts.seed);
    if (*rep.brute != rep.combinatorial && opts.trials < 25)
      rep.brute = brute_index_for(fl, g.cuts, 25, opts.seed);
  }
  return rep;
}

}  // namespace seaweed
