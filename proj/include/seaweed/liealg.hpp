#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seaweed/meander.hpp"

namespace seaweed {

// Basis element of a concrete gl_n-flavored realization.
//   Unit:       E_{a,b} t^degree with degree 0 or -1
//   Cartan:     E_{a,a} - E_{a+1,a+1}
//   Derivation: the degree-counting element d
struct BasisElement {
  enum class Kind { Unit, Cartan, Derivation };
  Kind kind;
  int a = 0;
  int b = 0;
  int degree = 0;

  auto operator<=>(const BasisElement&) const = default;
};

using SparseVec = std::vector<std::pair<int, std::int64_t>>;

struct StructureConstants {
  int n = 0;  // size of the underlying matrix realization
  std::vector<BasisElement> basis;
  std::vector<std::vector<SparseVec>> table;  // table[u][v] = [b_u, b_v]

  int dim() const { return static_cast<int>(basis.size()); }
};

// [x, y] for coefficient vectors over the basis, via the bracket table.
std::vector<std::int64_t> bracket_apply(const StructureConstants& sc,
                                        const std::vector<std::int64_t>& x,
                                        const std::vector<std::int64_t>& y);

// Shift both removed-index sets by -k modulo n (affine type A relabeling).
CutPair rotate_cuts(int n, const CutPair& cuts, int k);

// Affine type-A seaweed modulo its central element.  Requires 0 in the
// inner cut set; rotate first if needed.
StructureConstants build_seaweed_affine_A(int n, const CutPair& cuts);

// Ordinary seaweed in sl_n from finite cut sets over {1..n-1}.
StructureConstants build_seaweed_finite_A(int n, const CutPair& cuts);

// dim minus the best skew-form rank over `trials` random integer
// functionals drawn from a deterministic per-trial stream.  Always an
// upper bound for the index; equals it for generic functionals.
long long brute_index(const StructureConstants& sc, int trials,
                      std::uint64_t seed);

// Deterministic stream used for the functionals.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform in [-1000, 1000]
  std::int64_t coordinate() { return static_cast<std::int64_t>(next() % 2001) - 1000; }
};

}  // namespace seaweed
