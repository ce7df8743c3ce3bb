#pragma once

#include <cstdint>
#include <optional>

#include "seaweed/meander.hpp"

namespace seaweed {

// 2 if some cycle carries an odd number of affine arcs, else 0.  Finite
// graphs have no affine arcs, so the value is 0 there.
int iota_correction(const std::vector<Component>& comps);

long long index_affine_A(const Census& c, int iota);
long long index_affine_C(const Census& c, int iota);
long long index_finite_A(const Census& c);
long long index_finite_BC(const Census& c);

// Census + iota + the family formula in one step.
long long combinatorial_index(const Flavor& fl,
                              const std::vector<Component>& comps);

// Index of the affine type-A seaweed with maximal cuts I = {0}, I' = {d}:
// gcd(n, 2d) minus 2 unless gcd(n, 2d) divides d.
long long closed_form_gcd(long long n, long long d);

// Index of the affine type-C seaweed with maximal cuts I = {i}, I' = {j}.
long long closed_form_cmax(long long r, long long i, long long j);

struct IndexReport {
  Flavor flavor;
  CutPair cuts;
  Census census;
  int iota = 0;
  long long combinatorial = 0;
  std::optional<long long> tyj;
  std::optional<long long> brute;

  bool oracles_agree() const {
    if (tyj && *tyj != combinatorial) return false;
    if (brute && *brute != combinatorial) return false;
    return true;
  }
  // ind of the full central extension; meaningful for affine flavors.
  long long index_of_qhat() const {
    return flavor.affine() ? combinatorial + 1 : combinatorial;
  }
};

}  // namespace seaweed
