#include "seaweed/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "seaweed/index.hpp"
#include "seaweed/liealg.hpp"
#include "seaweed/rank.hpp"
#include "seaweed/tyj.hpp"

namespace seaweed {

namespace {

[[noreturn]] void fail(const MeanderGraph& g, const std::string& what) {
  std::ostringstream os;
  os << g.flavor.describe() << " outer={";
  for (std::size_t i = 0; i < g.cuts.outer.size(); ++i)
    os << (i ? "," : "") << g.cuts.outer[i];
  os << "} inner={";
  for (std::size_t i = 0; i < g.cuts.inner.size(); ++i)
    os << (i ? "," : "") << g.cuts.inner[i];
  os << "}: " << what;
  throw InvariantViolation(os.str());
}

bool is_sigma_stable_arc(const Flavor& fl, const Arc& a) {
  return a.from + a.to == fl.vertex_count() + 1;
}

// Image of epsilon_v under the folding that identifies a vertex above the
// reflection axis with minus the epsilon of its mirror (C-side families).
void add_folded_eps(const Flavor& fl, std::vector<std::int64_t>& eps, int v,
                    std::int64_t sign) {
  int r = fl.rank;
  if (v <= r)
    eps[v - 1] += sign;
  else
    eps[sigma_vertex(fl, v) - 1] -= sign;
}

void check_shadow(const MeanderGraph& g, const Arc& a) {
  const Flavor& fl = g.flavor;
  for (auto c : a.shadow.coeffs)
    if (c < 0 || c > 2) fail(g, "shadow multiplicity out of {0,1,2}");
  if (fl.affine() && a.shadow.coeffs[0] > 1)
    fail(g, "alpha_0 multiplicity above 1");
  if (!fl.symmetric()) {
    for (std::size_t p = 0; p < a.shadow.coeffs.size(); ++p)
      if (a.shadow.coeffs[p] > 1)
        fail(g, "multiplicity 2 outside the B/C families");
  }

  const EpsilonForm got = to_epsilon(fl, a.shadow);
  if (fl.affine() && got.delta != a.shadow.coeffs.front())
    fail(g, "delta coefficient disagrees with the alpha_0 multiplicity");

  std::vector<std::int64_t> want(got.eps.size(), 0);
  switch (fl.family) {
    case Family::AffineA:
    case Family::FiniteA:
      want[a.from - 1] += 1;
      want[a.to - 1] -= 1;
      break;
    case Family::AffineC:
    case Family::FiniteC:
      add_folded_eps(fl, want, a.from, 1);
      add_folded_eps(fl, want, a.to, -1);
      break;
    case Family::FiniteB:
      if (is_sigma_stable_arc(fl, a)) {
        // 2 eps_u - eps_r for the mirrored arc (u, sigma(u))
        want[std::min(a.from, a.to) - 1] += 2;
        want[fl.rank - 1] -= 1;
      } else {
        add_folded_eps(fl, want, a.from, 1);
        add_folded_eps(fl, want, a.to, -1);
      }
      break;
  }
  if (got.eps != want)
    fail(g, "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                ") shadow does not match its endpoints in the epsilon basis");
}

}  // namespace

void check_graph_invariants(const MeanderGraph& g,
                            const std::vector<Component>& comps) {
  const Flavor& fl = g.flavor;
  const int n = g.vertices();

  std::vector<std::array<int, 2>> incidence(n, {-1, -1});
  for (const Arc& a : g.arcs) {
    if (a.from == a.to) fail(g, "loop arc");
    if (a.from < 1 || a.from > n || a.to < 1 || a.to > n)
      fail(g, "arc endpoint out of range");
    for (int v : {a.from, a.to}) {
      auto& slot = incidence[v - 1][a.side == Side::Outer ? 0 : 1];
      if (slot >= 0) fail(g, "vertex with two arcs on one side");
      slot = a.id;
    }
    if (a.affine != (fl.affine() && a.shadow.coeffs[0] > 0))
      fail(g, "affine flag disagrees with the shadow");
    check_shadow(g, a);
  }

  // Components partition the vertices and have consistent shapes.
  std::vector<int> owner(n, -1);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Component& c = comps[ci];
    for (int v : c.vertices) {
      if (owner[v - 1] >= 0) fail(g, "vertex in two components");
      owner[v - 1] = static_cast<int>(ci);
    }
    const std::size_t nv = c.vertices.size(), na = c.arc_ids.size();
    if (c.kind == ComponentKind::Cycle) {
      if (na != nv || nv < 2) fail(g, "bad cycle shape");
    } else if (na + 1 != nv) {
      fail(g, "bad segment shape");
    }
    int affine_arcs = 0;
    for (int aid : c.arc_ids)
      if (g.arcs[aid].affine) ++affine_arcs;
    if (affine_arcs != c.affine_arc_count) fail(g, "affine arc census off");
  }
  for (int v = 1; v <= n; ++v)
    if (owner[v - 1] < 0) fail(g, "vertex missing from the components");

  if (!fl.symmetric()) return;

  // Reflection equivariance: every arc has a mirror arc with equal shadow.
  std::map<std::tuple<Side, int, int>, const Arc*> by_ends;
  for (const Arc& a : g.arcs)
    by_ends[{a.side, std::min(a.from, a.to), std::max(a.from, a.to)}] = &a;
  for (const Arc& a : g.arcs) {
    int u = sigma_vertex(fl, a.from), v = sigma_vertex(fl, a.to);
    auto it = by_ends.find({a.side, std::min(u, v), std::max(u, v)});
    if (it == by_ends.end()) fail(g, "missing sigma image of an arc");
    if (it->second->shadow != a.shadow)
      fail(g, "sigma image carries a different shadow");
    if (!is_sigma_stable_arc(fl, a) && a.affine)
      fail(g, "non-sigma-stable arc marked affine");
  }

  int unstable = 0;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Component& c = comps[ci];
    if (!c.sigma_stable.has_value()) fail(g, "sigma stability not computed");
    std::set<int> verts(c.vertices.begin(), c.vertices.end());
    int stable_arcs = 0;
    for (int aid : c.arc_ids)
      if (is_sigma_stable_arc(fl, g.arcs[aid])) ++stable_arcs;
    if (*c.sigma_stable) {
      const int want = c.kind == ComponentKind::Cycle ? 2 : 1;
      if (!c.arc_ids.empty() && stable_arcs != want)
        fail(g, "sigma-stable component with wrong number of mirrored arcs");
    } else {
      ++unstable;
      if (stable_arcs != 0)
        fail(g, "mirrored arc inside a non-sigma-stable component");
      for (int v : c.vertices)
        if (verts.count(sigma_vertex(fl, v)))
          fail(g, "component neither sigma-stable nor disjoint from its image");
    }
  }
  if (unstable % 2 != 0) fail(g, "odd number of non-sigma-stable components");
}

void check_rank_invariants(const MeanderGraph& g,
                           const std::vector<Component>& comps) {
  const Flavor& fl = g.flavor;

  // Per-side beta rows are linearly independent.
  for (Side s : {Side::Outer, Side::Inner}) {
    const auto rows = beta_rows(g, s);
    if (rank_exact(rows_to_matrix(rows)) != static_cast<int>(rows.size()))
      fail(g, std::string("dependent beta rows on the ") + side_name(s) +
                  " side");
  }

  const bool sym = fl.symmetric();
  for (const Component& c : comps) {
    if (c.kind == ComponentKind::Segment) {
      // Betas of a segment are independent, counting one row per
      // sigma-orbit of its arcs.
      std::set<int> ids(c.arc_ids.begin(), c.arc_ids.end());
      std::vector<RootVector> rows;
      for (int aid : c.arc_ids) {
        const Arc& a = g.arcs[aid];
        bool keep = true;
        if (sym && !is_sigma_stable_arc(fl, a)) {
          int u = sigma_vertex(fl, a.from), v = sigma_vertex(fl, a.to);
          for (int other : ids) {
            const Arc& o = g.arcs[other];
            if (o.side == a.side && std::min(o.from, o.to) == std::min(u, v) &&
                std::max(o.from, o.to) == std::max(u, v)) {
              // mirror arc lives in this very segment; keep only one of them
              keep = std::make_pair(std::min(a.from, a.to),
                                    std::max(a.from, a.to)) <=
                     std::make_pair(std::min(u, v), std::max(u, v));
              break;
            }
          }
        }
        if (keep) rows.push_back(a.shadow);
      }
      if (rank_exact(rows_to_matrix(rows)) != static_cast<int>(rows.size()))
        fail(g, "dependent beta rows inside a segment");
      continue;
    }

    // Cycle: the signed traversal sum lies in Z*delta, vanishes for finite
    // flavors, and its delta coefficient has the parity of the affine count.
    RootVector sum = zero_root_vector(fl);
    const int m = static_cast<int>(c.vertices.size());
    for (int k = 0; k < m; ++k) {
      const Arc& a = g.arcs[c.arc_ids[k]];
      const int tail = c.vertices[k];
      const int head = c.vertices[(k + 1) % m];
      if (!a.touches(tail) || !a.touches(head) || a.other_end(tail) != head)
        fail(g, "cycle traversal order is inconsistent");
      const std::int64_t sign = a.from == tail ? 1 : -1;
      for (std::size_t p = 0; p < sum.coeffs.size(); ++p)
        sum.coeffs[p] += sign * a.shadow.coeffs[p];
    }
    if (!fl.affine()) {
      if (!sum.is_zero()) fail(g, "nonzero signed sum around a finite cycle");
      continue;
    }
    const RootVector delta = delta_vector(fl);
    const std::int64_t k = sum.coeffs[0];
    for (std::size_t p = 0; p < sum.coeffs.size(); ++p)
      if (sum.coeffs[p] != k * delta.coeffs[p])
        fail(g, "signed cycle sum escapes the delta line");
    if (((k % 2) + 2) % 2 != c.affine_arc_count % 2)
      fail(g, "cycle winding parity disagrees with the affine arc count");
  }
}

void check_symmetry_invariants(const Flavor& fl, const CutPair& cuts,
                               long long expected_index) {
  auto index_of = [&](const CutPair& c) {
    const MeanderGraph g = build_graph(fl, c);
    return combinatorial_index(fl, components(g));
  };
  if (index_of(CutPair{cuts.inner, cuts.outer}) != expected_index)
    throw InvariantViolation(fl.describe() +
                             ": index changed after swapping the cut sets");
  if (fl.family == Family::AffineA) {
    for (int k = 1; k < fl.rank; ++k)
      if (index_of(rotate_cuts(fl.rank, cuts, k)) != expected_index)
        throw InvariantViolation(fl.describe() + ": index changed under rotation by " +
                                 std::to_string(k));
  }
}

}  // namespace seaweed
