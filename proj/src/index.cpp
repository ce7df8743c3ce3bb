#include "seaweed/index.hpp"

#include <numeric>
#include <string>

namespace seaweed {

int iota_correction(const std::vector<Component>& comps) {
  for (const auto& c : comps)
    if (c.kind == ComponentKind::Cycle && c.affine_arc_count % 2 == 1)
      return 2;
  return 0;
}

long long index_affine_A(const Census& c, int iota) {
  return 2LL * c.cycles + c.segments - iota;
}

long long index_affine_C(const Census& c, int iota) {
  if (c.nonsigma_segments % 2 != 0)
    throw InvariantViolation("odd count of non-sigma-stable segments: " +
                             std::to_string(c.nonsigma_segments));
  return 1LL + c.cycles + c.nonsigma_segments / 2 - iota;
}

long long index_finite_A(const Census& c) {
  return c.segments + 2LL * c.cycles - 1;
}

long long index_finite_BC(const Census& c) {
  if (c.nonsigma_segments % 2 != 0)
    throw InvariantViolation("odd count of non-sigma-stable segments: " +
                             std::to_string(c.nonsigma_segments));
  return c.cycles + c.nonsigma_segments / 2LL;
}

long long combinatorial_index(const Flavor& fl,
                              const std::vector<Component>& comps) {
  const Census c = take_census(fl, comps);
  const int iota = iota_correction(comps);
  switch (fl.family) {
    case Family::AffineA: return index_affine_A(c, iota);
    case Family::AffineC: return index_affine_C(c, iota);
    case Family::FiniteA: return index_finite_A(c);
    case Family::FiniteB:
    case Family::FiniteC: return index_finite_BC(c);
  }
  throw InvariantViolation("combinatorial_index: unknown family");
}

long long closed_form_gcd(long long n, long long d) {
  if (d < 1 || 2 * d > n)
    throw ValidationError("closed_form_gcd requires 1 <= d <= n/2, got n=" +
                          std::to_string(n) + " d=" + std::to_string(d));
  long long g = std::gcd(n, 2 * d);
  return g - (d % g == 0 ? 0 : 2);
}

long long closed_form_cmax(long long r, long long i, long long j) {
  if (r < 1 || i < 0 || i > r || j < 0 || j > r)
    throw ValidationError("closed_form_cmax requires 0 <= i,j <= r, got r=" +
                          std::to_string(r) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j));
  return i == j ? r + 1 : r - 1;
}

}  // namespace seaweed
