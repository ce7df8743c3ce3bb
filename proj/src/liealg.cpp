#include "seaweed/liealg.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "seaweed/rank.hpp"

namespace seaweed {

namespace {

// Block index of position x in the composition of n cut at the sorted
// positions in `cuts` (a cut at j separates {..j} from {j+1..}).
int block_of(const std::vector<int>& cuts, int x) {
  int b = 0;
  for (int j : cuts)
    if (j < x) ++b;
  return b;
}

class Builder {
public:
  explicit Builder(int n) : n_(n) {}

  int add(BasisElement e) {
    int id = static_cast<int>(basis_.size());
    basis_.push_back(e);
    if (e.kind == BasisElement::Kind::Unit)
      units_[{e.a, e.b, e.degree}] = id;
    else if (e.kind == BasisElement::Kind::Cartan)
      cartans_[e.a] = id;
    else
      derivation_ = id;
    return id;
  }

  StructureConstants finish() {
    StructureConstants sc;
    sc.n = n_;
    sc.basis = basis_;
    const int d = sc.dim();
    sc.table.assign(d, std::vector<SparseVec>(d));
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v) {
        SparseVec w = bracket(basis_[u], basis_[v]);
        SparseVec neg;
        neg.reserve(w.size());
        for (auto [i, c] : w) neg.emplace_back(i, -c);
        sc.table[u][v] = std::move(w);
        sc.table[v][u] = std::move(neg);
      }
    return sc;
  }

private:
  int unit_id(int a, int b, int degree) const {
    auto it = units_.find({a, b, degree});
    if (it == units_.end())
      throw InvariantViolation("bracket left the span: E(" + std::to_string(a) +
                               "," + std::to_string(b) + ") at degree " +
                               std::to_string(degree));
    return it->second;
  }

  // E_{a,a} - E_{b,b} as a combination of the Cartan generators.
  void add_diagonal(SparseVec& out, int a, int b, std::int64_t coeff) const {
    if (a == b) return;
    int lo = std::min(a, b), hi = std::max(a, b);
    std::int64_t s = a < b ? coeff : -coeff;
    for (int i = lo; i < hi; ++i) out.emplace_back(cartans_.at(i), s);
  }

  SparseVec bracket(const BasisElement& x, const BasisElement& y) const {
    using K = BasisElement::Kind;
    SparseVec out;
    if (x.kind == K::Unit && y.kind == K::Unit) {
      const int deg = x.degree + y.degree;
      const bool left = x.b == y.a;   // E_{x.a, y.b}
      const bool right = y.b == x.a;  // -E_{y.a, x.b}
      if (deg < -1) {
        if (left || right)
          throw InvariantViolation("nonzero bracket below degree -1");
        return out;
      }
      if (left && right) {
        // diagonal: E_{x.a,x.a} - E_{x.b,x.b}
        if (deg != 0)
          throw InvariantViolation("diagonal bracket at nonzero degree");
        add_diagonal(out, x.a, x.b, 1);
        return out;
      }
      if (left) out.emplace_back(unit_id(x.a, y.b, deg), 1);
      if (right) out.emplace_back(unit_id(y.a, x.b, deg), -1);
      return out;
    }
    if (x.kind == K::Cartan && y.kind == K::Unit) {
      auto weight = [&](int pos) { return (pos == x.a ? 1 : 0) - (pos == x.a + 1 ? 1 : 0); };
      std::int64_t c = weight(y.a) - weight(y.b);
      if (c != 0) out.emplace_back(unit_id(y.a, y.b, y.degree), c);
      return out;
    }
    if (x.kind == K::Unit && y.kind == K::Cartan) {
      out = bracket(y, x);
      for (auto& [i, c] : out) c = -c;
      return out;
    }
    if (x.kind == K::Derivation && y.kind == K::Unit) {
      if (y.degree != 0) out.emplace_back(unit_id(y.a, y.b, y.degree), y.degree);
      return out;
    }
    if (x.kind == K::Unit && y.kind == K::Derivation) {
      if (x.degree != 0) out.emplace_back(unit_id(x.a, x.b, x.degree), -x.degree);
      return out;
    }
    // Cartan-Cartan, Derivation-Cartan, Derivation-Derivation all vanish.
    return out;
  }

  int n_;
  std::vector<BasisElement> basis_;
  std::map<std::tuple<int, int, int>, int> units_;
  std::map<int, int> cartans_;
  int derivation_ = -1;
};

void add_degree_zero_part(Builder& bld, int n, const std::vector<int>& cuts_s,
                          const std::vector<int>& cuts_s1) {
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      if (block_of(cuts_s, a) <= block_of(cuts_s, b) &&
          block_of(cuts_s1, a) >= block_of(cuts_s1, b))
        bld.add({BasisElement::Kind::Unit, a, b, 0});
    }
  for (int i = 1; i <= n - 1; ++i) bld.add({BasisElement::Kind::Cartan, i, 0, 0});
}

std::vector<int> strip_zero(const std::vector<int>& cut) {
  std::vector<int> out;
  for (int i : cut)
    if (i != 0) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::int64_t> bracket_apply(const StructureConstants& sc,
                                        const std::vector<std::int64_t>& x,
                                        const std::vector<std::int64_t>& y) {
  std::vector<std::int64_t> out(sc.dim(), 0);
  for (int u = 0; u < sc.dim(); ++u) {
    if (x[u] == 0) continue;
    for (int v = 0; v < sc.dim(); ++v) {
      if (y[v] == 0) continue;
      for (auto [w, c] : sc.table[u][v]) out[w] += x[u] * y[v] * c;
    }
  }
  return out;
}

CutPair rotate_cuts(int n, const CutPair& cuts, int k) {
  auto shift = [&](const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int i : v) out.push_back(((i - k) % n + n) % n);
    std::sort(out.begin(), out.end());
    return out;
  };
  return CutPair{shift(cuts.outer), shift(cuts.inner)};
}

StructureConstants build_seaweed_affine_A(int n, const CutPair& cuts) {
  Flavor fl{Family::AffineA, n};
  CutPair c = normalize_cuts(cuts);
  validate_cuts(fl, c);
  if (!std::binary_search(c.inner.begin(), c.inner.end(), 0))
    throw ValidationError(
        "affine realization needs 0 in the inner cut set; rotate the cuts first");

  const std::vector<int> cuts_s = strip_zero(c.outer);
  const std::vector<int> cuts_s1 = strip_zero(c.inner);

  Builder bld(n);
  add_degree_zero_part(bld, n, cuts_s, cuts_s1);
  bld.add({BasisElement::Kind::Derivation, 0, 0, 0});

  const bool alpha0_kept = !std::binary_search(c.outer.begin(), c.outer.end(), 0);
  if (alpha0_kept) {
    // Corner block of the outer parabolic at loop degree -1: rows in the
    // first block, columns in the last.
    const int last = static_cast<int>(cuts_s.size());
    for (int a = 1; a <= n; ++a) {
      if (block_of(cuts_s, a) != 0) continue;
      for (int b = 1; b <= n; ++b) {
        if (block_of(cuts_s, b) != last) continue;
        bld.add({BasisElement::Kind::Unit, a, b, -1});
      }
    }
  }
  return bld.finish();
}

StructureConstants build_seaweed_finite_A(int n, const CutPair& cuts) {
  Flavor fl{Family::FiniteA, n};
  CutPair c = normalize_cuts(cuts);
  validate_cuts(fl, c);
  Builder bld(n);
  add_degree_zero_part(bld, n, c.outer, c.inner);
  return bld.finish();
}

long long brute_index(const StructureConstants& sc, int trials,
                      std::uint64_t seed) {
  if (trials < 1) throw ValidationError("brute_index needs at least one trial");
  const int d = sc.dim();
  // Per-trial seeds are drawn upfront, so the trial order can never depend
  // on scheduling.
  SplitMix64 root(seed);
  std::vector<std::uint64_t> trial_seed(trials);
  for (auto& s : trial_seed) s = root.next();

  int best = 0;
  const int even_cap = d - (d % 2);  // skew forms have even rank
  for (int t = 0; t < trials && best < even_cap; ++t) {
    SplitMix64 gen(trial_seed[t]);
    std::vector<std::int64_t> xi(d);
    for (auto& x : xi) x = gen.coordinate();
    IntMatrix m(d, std::vector<std::int64_t>(d, 0));
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v) {
        std::int64_t s = 0;
        for (auto [w, c] : sc.table[u][v]) s += c * xi[w];
        m[u][v] = s;
        m[v][u] = -s;
      }
    best = std::max(best, rank_exact(std::move(m)));
  }
  return d - best;
}

}  // namespace seaweed
