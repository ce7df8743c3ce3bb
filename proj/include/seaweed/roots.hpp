#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "seaweed/errors.hpp"

namespace seaweed {

// The supported algebra families.  A-families are parametrised by n (the
// number of graph vertices), B/C-families by r (half the vertex count).
enum class Family { AffineA, AffineC, FiniteA, FiniteB, FiniteC };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws ValidationError

struct Flavor {
  Family family;
  int rank;  // n for A families, r for B/C families

  bool affine() const;
  bool symmetric() const;     // carries the vertex reflection sigma (B/C families)
  int vertex_count() const;   // N
  int root_count() const;     // number of simple roots
  int root_index_base() const;  // lowest simple-root index: 0 affine, 1 finite
  void validate() const;        // throws ValidationError on a bad rank
  std::string describe() const;

  auto operator<=>(const Flavor&) const = default;
};

// Integer vector over the simple-root basis.  Position p holds the
// coefficient of alpha_{base+p}, where base is the flavor's lowest index.
struct RootVector {
  std::vector<std::int64_t> coeffs;

  std::int64_t coeff(const Flavor& fl, int root_index) const;
  bool is_zero() const;

  auto operator<=>(const RootVector&) const = default;
};

RootVector zero_root_vector(const Flavor& fl);

// The basic imaginary root delta as a simple-root combination (affine only).
RootVector delta_vector(const Flavor& fl);

// One arc of the boundary circle (affine) or line (finite): it joins
// `tail` to `head` clockwise and carries the simple root alpha_{label}.
struct BoundaryArc {
  int tail;
  int head;
  int label;

  auto operator<=>(const BoundaryArc&) const = default;
};

// Boundary arcs in positional order: arc k joins vertex k to k+1; in the
// affine case the last arc closes the circle from N back to 1.
std::vector<BoundaryArc> labeling(const Flavor& fl);

// The reflection v -> N+1-v of the B/C families.  Throws on A families.
int sigma_vertex(const Flavor& fl, int v);

// A root-lattice vector rewritten in the epsilon basis, with the delta
// component split off.  eps[i-1] is the coefficient of epsilon_i.
struct EpsilonForm {
  std::vector<std::int64_t> eps;
  std::int64_t delta = 0;

  auto operator<=>(const EpsilonForm&) const = default;
};

EpsilonForm to_epsilon(const Flavor& fl, const RootVector& v);

// Display form such as "d-2e1" or "e1-e5".
std::string epsilon_to_string(const EpsilonForm& e);

// Expected beta-set of the uncut (I = empty) meander graph of a finite
// flavor, in the alpha basis.  Used as an anchor for the graph builder.
std::vector<RootVector> full_cascade_anchor(const Flavor& fl);

}  // namespace seaweed
