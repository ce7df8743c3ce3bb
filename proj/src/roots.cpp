#include "seaweed/roots.hpp"

#include <sstream>

namespace seaweed {

const char* family_name(Family f) {
  switch (f) {
    case Family::AffineA: return "affine-a";
    case Family::AffineC: return "affine-c";
    case Family::FiniteA: return "finite-a";
    case Family::FiniteB: return "finite-b";
    case Family::FiniteC: return "finite-c";
  }
  throw InvariantViolation("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "affine-a") return Family::AffineA;
  if (name == "affine-c") return Family::AffineC;
  if (name == "finite-a") return Family::FiniteA;
  if (name == "finite-b") return Family::FiniteB;
  if (name == "finite-c") return Family::FiniteC;
  throw ValidationError("unknown family '" + name +
                        "' (expected affine-a, affine-c, finite-a, finite-b or finite-c)");
}

bool Flavor::affine() const {
  return family == Family::AffineA || family == Family::AffineC;
}

bool Flavor::symmetric() const {
  return family == Family::AffineC || family == Family::FiniteB ||
         family == Family::FiniteC;
}

int Flavor::vertex_count() const {
  switch (family) {
    case Family::AffineA:
    case Family::FiniteA: return rank;
    case Family::AffineC:
    case Family::FiniteB:
    case Family::FiniteC: return 2 * rank;
  }
  throw InvariantViolation("vertex_count: unknown family");
}

int Flavor::root_count() const {
  switch (family) {
    case Family::AffineA: return rank;      // alpha_0..alpha_{n-1}
    case Family::AffineC: return rank + 1;  // alpha_0..alpha_r
    case Family::FiniteA: return rank - 1;  // alpha_1..alpha_{n-1}
    case Family::FiniteB:
    case Family::FiniteC: return rank;      // alpha_1..alpha_r
  }
  throw InvariantViolation("root_count: unknown family");
}

int Flavor::root_index_base() const { return affine() ? 0 : 1; }

void Flavor::validate() const {
  switch (family) {
    case Family::AffineA:
    case Family::FiniteA:
      if (rank < 2)
        throw ValidationError(describe() + ": n must be at least 2");
      return;
    case Family::AffineC:
    case Family::FiniteC:
      if (rank < 1)
        throw ValidationError(describe() + ": r must be at least 1");
      return;
    case Family::FiniteB:
      if (rank < 2)
        throw ValidationError(describe() + ": r must be at least 2");
      return;
  }
  throw ValidationError("unknown family");
}

std::string Flavor::describe() const {
  std::ostringstream os;
  os << family_name(family) << "(" << rank << ")";
  return os.str();
}

std::int64_t RootVector::coeff(const Flavor& fl, int root_index) const {
  int p = root_index - fl.root_index_base();
  if (p < 0 || p >= static_cast<int>(coeffs.size()))
    throw ValidationError("root index " + std::to_string(root_index) +
                          " out of range for " + fl.describe());
  return coeffs[p];
}

bool RootVector::is_zero() const {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

RootVector zero_root_vector(const Flavor& fl) {
  return RootVector{std::vector<std::int64_t>(fl.root_count(), 0)};
}

RootVector delta_vector(const Flavor& fl) {
  fl.validate();
  if (!fl.affine())
    throw ValidationError("delta is defined for affine flavors only");
  RootVector d = zero_root_vector(fl);
  if (fl.family == Family::AffineA) {
    for (auto& c : d.coeffs) c = 1;
  } else {
    // delta = alpha_0 + alpha_r + 2 sum_{i=1}^{r-1} alpha_i
    int r = fl.rank;
    d.coeffs[0] = 1;
    d.coeffs[r] = 1;
    for (int i = 1; i < r; ++i) d.coeffs[i] = 2;
  }
  return d;
}

std::vector<BoundaryArc> labeling(const Flavor& fl) {
  fl.validate();
  const int n = fl.vertex_count();
  std::vector<BoundaryArc> arcs;
  auto pos_label = [&](int k) -> int {
    switch (fl.family) {
      case Family::AffineA:
        return k == n ? 0 : k;
      case Family::AffineC: {
        int r = fl.rank;
        if (k == n) return 0;
        return k <= r ? k : n - k;
      }
      case Family::FiniteA:
        return k;
      case Family::FiniteB:
      case Family::FiniteC: {
        int r = fl.rank;
        return k <= r ? k : n - k;
      }
    }
    throw InvariantViolation("labeling: unknown family");
  };
  const int m = fl.affine() ? n : n - 1;
  arcs.reserve(m);
  for (int k = 1; k <= m; ++k)
    arcs.push_back(BoundaryArc{k, k == n ? 1 : k + 1, pos_label(k)});
  return arcs;
}

int sigma_vertex(const Flavor& fl, int v) {
  fl.validate();
  if (!fl.symmetric())
    throw ValidationError("sigma is defined for the B/C families only, not " +
                          fl.describe());
  const int n = fl.vertex_count();
  if (v < 1 || v > n)
    throw ValidationError("vertex " + std::to_string(v) + " out of range 1.." +
                          std::to_string(n));
  return n + 1 - v;
}

EpsilonForm to_epsilon(const Flavor& fl, const RootVector& v) {
  fl.validate();
  if (static_cast<int>(v.coeffs.size()) != fl.root_count())
    throw ValidationError("coefficient vector has length " +
                          std::to_string(v.coeffs.size()) + ", expected " +
                          std::to_string(fl.root_count()) + " for " +
                          fl.describe());
  const auto& c = v.coeffs;
  EpsilonForm out;
  switch (fl.family) {
    case Family::AffineA: {
      // alpha_0 = eps_n - eps_1 + delta, alpha_i = eps_i - eps_{i+1}
      int n = fl.rank;
      out.eps.assign(n, 0);
      out.delta = c[0];
      for (int i = 1; i <= n - 1; ++i) {
        out.eps[i - 1] += c[i];
        out.eps[i] -= c[i];
      }
      out.eps[n - 1] += c[0];
      out.eps[0] -= c[0];
      break;
    }
    case Family::FiniteA: {
      int n = fl.rank;
      out.eps.assign(n, 0);
      for (int i = 1; i <= n - 1; ++i) {
        out.eps[i - 1] += c[i - 1];
        out.eps[i] -= c[i - 1];
      }
      break;
    }
    case Family::AffineC: {
      // alpha_0 = delta - 2 eps_1, alpha_i = eps_i - eps_{i+1} (i < r),
      // alpha_r = 2 eps_r
      int r = fl.rank;
      out.eps.assign(r, 0);
      out.delta = c[0];
      out.eps[0] -= 2 * c[0];
      for (int i = 1; i < r; ++i) {
        out.eps[i - 1] += c[i];
        out.eps[i] -= c[i];
      }
      out.eps[r - 1] += 2 * c[r];
      break;
    }
    case Family::FiniteB:
    case Family::FiniteC: {
      // alpha_i = eps_i - eps_{i+1} (i < r); alpha_r = eps_r (B) or 2 eps_r (C)
      int r = fl.rank;
      out.eps.assign(r, 0);
      for (int i = 1; i < r; ++i) {
        out.eps[i - 1] += c[i - 1];
        out.eps[i] -= c[i - 1];
      }
      out.eps[r - 1] += (fl.family == Family::FiniteC ? 2 : 1) * c[r - 1];
      break;
    }
  }
  return out;
}

std::string epsilon_to_string(const EpsilonForm& e) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](std::int64_t coeff, const std::string& sym) {
    if (coeff == 0) return;
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? "-" : "+");
    }
    std::int64_t a = coeff < 0 ? -coeff : coeff;
    if (a != 1) os << a;
    os << sym;
    first = false;
  };
  term(e.delta, "d");
  for (std::size_t i = 0; i < e.eps.size(); ++i)
    term(e.eps[i], "e" + std::to_string(i + 1));
  if (first) os << "0";
  return os.str();
}

std::vector<RootVector> full_cascade_anchor(const Flavor& fl) {
  fl.validate();
  if (fl.affine())
    throw ValidationError("full_cascade_anchor applies to finite flavors only");
  std::vector<RootVector> out;
  if (fl.family == Family::FiniteA) {
    int n = fl.rank;
    for (int i = 1; i <= n / 2; ++i) {
      RootVector v = zero_root_vector(fl);
      for (int u = i; u <= n - i; ++u) v.coeffs[u - 1] = 1;  // eps_i - eps_{n+1-i}
      out.push_back(std::move(v));
    }
  } else {
    // B and C share the shadow pattern 2 alpha_i + .. + 2 alpha_{r-1} + alpha_r;
    // in type C it evaluates to 2 eps_i.
    int r = fl.rank;
    for (int i = 1; i <= r; ++i) {
      RootVector v = zero_root_vector(fl);
      for (int u = i; u < r; ++u) v.coeffs[u - 1] = 2;
      v.coeffs[r - 1] = 1;
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace seaweed
