#include "doctest.h"

#include <algorithm>
#include <set>

#include "seaweed/checks.hpp"
#include "seaweed/meander.hpp"

using namespace seaweed;

namespace {

using EndPair = std::pair<int, int>;

std::set<EndPair> arc_set(const MeanderGraph& g, Side s) {
  std::set<EndPair> out;
  for (const Arc& a : g.arcs)
    if (a.side == s) out.insert({a.from, a.to});
  return out;
}

const Arc& arc_between(const MeanderGraph& g, Side s, int u, int v) {
  for (const Arc& a : g.arcs)
    if (a.side == s && std::min(a.from, a.to) == std::min(u, v) &&
        std::max(a.from, a.to) == std::max(u, v))
      return a;
  FAIL("no arc between ", u, " and ", v);
  return g.arcs.front();
}

// Every subset of {lo..hi}, optionally skipping the empty one.
std::vector<std::vector<int>> subsets(int lo, int hi, bool allow_empty) {
  const int k = hi - lo + 1;
  std::vector<std::vector<int>> out;
  for (int mask = allow_empty ? 0 : 1; mask < (1 << k); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < k; ++b)
      if (mask & (1 << b)) s.push_back(lo + b);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("graph of affine A(10), I={9}, I'={4,8}") {
  const Flavor fl{Family::AffineA, 10};
  const MeanderGraph g = build_graph(fl, {{9}, {4, 8}});
  CHECK(arc_set(g, Side::Outer) ==
        std::set<EndPair>{{10, 9}, {1, 8}, {2, 7}, {3, 6}, {4, 5}});
  CHECK(arc_set(g, Side::Inner) ==
        std::set<EndPair>{{9, 4}, {10, 3}, {1, 2}, {5, 8}, {6, 7}});

  const auto comps = components(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].kind == ComponentKind::Cycle);
  CHECK(comps[0].vertices.size() == 10);
  CHECK(comps[0].affine_arc_count == 3);
  CHECK(arc_between(g, Side::Outer, 10, 9).affine);
  CHECK(arc_between(g, Side::Inner, 10, 3).affine);
  CHECK(arc_between(g, Side::Inner, 9, 4).affine);
}

TEST_CASE("graph of affine A(9), I={3,8}, I'={2,6}") {
  const Flavor fl{Family::AffineA, 9};
  const MeanderGraph g = build_graph(fl, {{3, 8}, {2, 6}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  int cycles = 0, segments = 0;
  for (const auto& c : comps) {
    if (c.kind == ComponentKind::Cycle) {
      ++cycles;
      CHECK(c.affine_arc_count == 2);
      std::set<int> expect_affine;
      for (int aid : c.arc_ids)
        if (g.arcs[aid].affine) expect_affine.insert(aid);
      CHECK(expect_affine ==
            std::set<int>{arc_between(g, Side::Inner, 7, 2).id,
                          arc_between(g, Side::Inner, 8, 1).id});
    } else {
      ++segments;
    }
  }
  CHECK(cycles == 1);
  CHECK(segments == 1);
}

TEST_CASE("uncut finite graphs match the cascade anchors") {
  for (Flavor fl : {Flavor{Family::FiniteA, 7}, Flavor{Family::FiniteA, 8},
                    Flavor{Family::FiniteA, 2}, Flavor{Family::FiniteB, 4},
                    Flavor{Family::FiniteC, 5}, Flavor{Family::FiniteC, 1}}) {
    const MeanderGraph g = build_graph(fl, {{}, {}});
    std::multiset<RootVector> outer;
    for (const Arc& a : g.arcs)
      if (a.side == Side::Outer) outer.insert(a.shadow);
    const auto anchor = full_cascade_anchor(fl);
    CHECK(outer == std::multiset<RootVector>(anchor.begin(), anchor.end()));
  }
}

TEST_CASE("finite A uncut arcs pair i with n+1-i") {
  const Flavor fl{Family::FiniteA, 7};
  const MeanderGraph g = build_graph(fl, {{}, {}});
  CHECK(arc_set(g, Side::Outer) == std::set<EndPair>{{1, 7}, {2, 6}, {3, 5}});
  CHECK(arc_set(g, Side::Outer) == arc_set(g, Side::Inner));
  for (const Arc& a : g.arcs) {
    EpsilonForm e = to_epsilon(fl, a.shadow);
    std::vector<std::int64_t> want(7, 0);
    want[a.from - 1] = 1;
    want[a.to - 1] = -1;
    CHECK(e.eps == want);
  }
}

TEST_CASE("affine C with both cuts at alpha_0") {
  const Flavor fl{Family::AffineC, 3};
  const MeanderGraph g = build_graph(fl, {{0}, {0}});
  CHECK(arc_set(g, Side::Outer) == std::set<EndPair>{{1, 6}, {2, 5}, {3, 4}});
  CHECK(arc_set(g, Side::Inner) == std::set<EndPair>{{1, 6}, {2, 5}, {3, 4}});
  // the mirrored arc through the alpha_r side reads 2 alpha_i + .. + alpha_r
  CHECK(arc_between(g, Side::Outer, 1, 6).shadow.coeffs ==
        std::vector<std::int64_t>{0, 2, 2, 1});
  for (const Arc& a : g.arcs) {
    EpsilonForm e = to_epsilon(fl, a.shadow);
    CHECK(e.delta == 0);
    int i = std::min(a.from, a.to);
    for (int k = 1; k <= 3; ++k) CHECK(e.eps[k - 1] == (k == i ? 2 : 0));
  }
  const auto comps = components(g);
  CHECK(comps.size() == 3);
  for (const auto& c : comps) {
    CHECK(c.kind == ComponentKind::Cycle);
    CHECK(c.vertices.size() == 2);
    CHECK(c.arc_ids.size() == 2);
  }
}

TEST_CASE("affine C maximal cuts give r two-vertex cycles") {
  for (int r = 1; r <= 5; ++r)
    for (int i = 0; i <= r; ++i) {
      const Flavor fl{Family::AffineC, r};
      const auto comps = components(build_graph(fl, {{i}, {i}}));
      CHECK(static_cast<int>(comps.size()) == r);
      for (const auto& c : comps) {
        CHECK(c.kind == ComponentKind::Cycle);
        CHECK(c.vertices.size() == 2);
      }
    }
}

TEST_CASE("isolated vertices are zero-length segments") {
  const Flavor fl{Family::FiniteA, 3};
  const MeanderGraph g = build_graph(fl, {{1, 2}, {1, 2}});
  CHECK(g.arcs.empty());
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  for (const auto& c : comps) {
    CHECK(c.kind == ComponentKind::Segment);
    CHECK(c.arc_ids.empty());
    CHECK(c.vertices.size() == 1);
  }
}

TEST_CASE("cut validation") {
  const Flavor affa{Family::AffineA, 5};
  CHECK_THROWS_AS(build_graph(affa, {{}, {1}}), ValidationError);
  CHECK_THROWS_AS(build_graph(affa, {{1}, {}}), ValidationError);
  CHECK_THROWS_AS(build_graph(affa, {{5}, {1}}), ValidationError);
  CHECK_THROWS_AS(build_graph(Flavor{Family::FiniteA, 5}, {{0}, {}}),
                  ValidationError);
  CHECK_NOTHROW(build_graph(Flavor{Family::FiniteA, 5}, {{}, {}}));
  CHECK_NOTHROW(build_graph(affa, {{0}, {4}}));
}

TEST_CASE("structural invariants over small exhaustive sweeps") {
  auto sweep = [](const Flavor& fl, bool allow_empty) {
    const int lo = fl.root_index_base();
    const int hi = lo + fl.root_count() - 1;
    const auto cuts = subsets(lo, hi, allow_empty);
    for (const auto& outer : cuts)
      for (const auto& inner : cuts) {
        const MeanderGraph g = build_graph(fl, {outer, inner});
        check_graph_invariants(g, components(g));
      }
  };
  sweep(Flavor{Family::AffineA, 5}, false);
  sweep(Flavor{Family::AffineC, 2}, false);
  sweep(Flavor{Family::FiniteA, 5}, true);
  sweep(Flavor{Family::FiniteB, 3}, true);
  sweep(Flavor{Family::FiniteC, 2}, true);
}

TEST_CASE("component ordering and traversal are canonical") {
  const Flavor fl{Family::AffineA, 9};
  const auto comps = components(build_graph(fl, {{3, 8}, {2, 6}}));
  for (std::size_t i = 1; i < comps.size(); ++i)
    CHECK(comps[i - 1].min_vertex() < comps[i].min_vertex());
  for (const auto& c : comps)
    if (c.kind == ComponentKind::Cycle)
      CHECK(*std::min_element(c.vertices.begin(), c.vertices.end()) ==
            c.vertices.front());
}
