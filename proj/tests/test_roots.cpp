#include "doctest.h"

#include <map>

#include "seaweed/rank.hpp"
#include "seaweed/roots.hpp"

using namespace seaweed;

namespace {

const Flavor kAffA10{Family::AffineA, 10};
const Flavor kAffC1{Family::AffineC, 1};
const Flavor kAffC4{Family::AffineC, 4};
const Flavor kFinA9{Family::FiniteA, 9};
const Flavor kFinB5{Family::FiniteB, 5};

BoundaryArc find_arc(const Flavor& fl, int tail, int head) {
  for (const auto& a : labeling(fl))
    if (a.tail == tail && a.head == head) return a;
  FAIL("no boundary arc ", tail, "->", head);
  return {};
}

}  // namespace

TEST_CASE("boundary labeling per family") {
  SUBCASE("affine A") {
    CHECK(find_arc(kAffA10, 10, 1).label == 0);
    CHECK(find_arc(kAffA10, 3, 4).label == 3);
    CHECK(labeling(kAffA10).size() == 10);
  }
  SUBCASE("affine C at rank 1") {
    auto arcs = labeling(kAffC1);
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0] == BoundaryArc{1, 2, 1});
    CHECK(arcs[1] == BoundaryArc{2, 1, 0});
  }
  SUBCASE("finite B") {
    auto arcs = labeling(kFinB5);
    REQUIRE(arcs.size() == 9);
    std::vector<int> labels;
    for (const auto& a : arcs) labels.push_back(a.label);
    CHECK(labels == std::vector<int>{1, 2, 3, 4, 5, 4, 3, 2, 1});
  }
  SUBCASE("label multiplicities") {
    for (Flavor fl : {kAffA10, kAffC4, kFinA9, kFinB5, Flavor{Family::FiniteC, 4}}) {
      std::map<int, int> count;
      for (const auto& a : labeling(fl)) ++count[a.label];
      const int lo = fl.root_index_base();
      const int hi = lo + fl.root_count() - 1;
      for (auto [label, c] : count) {
        CHECK(label >= lo);
        CHECK(label <= hi);
        if (!fl.symmetric())
          CHECK(c == 1);
        else if (label >= 1 && label < fl.rank)
          CHECK(c == 2);
        else
          CHECK(c == 1);
      }
    }
  }
}

TEST_CASE("rank validation") {
  CHECK_THROWS_AS((Flavor{Family::AffineA, 1}.validate()), ValidationError);
  CHECK_THROWS_AS((Flavor{Family::FiniteB, 1}.validate()), ValidationError);
  CHECK_THROWS_AS(labeling(Flavor{Family::FiniteA, 0}), ValidationError);
  CHECK_NOTHROW((Flavor{Family::AffineC, 1}.validate()));
}

TEST_CASE("sigma reflection") {
  CHECK(sigma_vertex(Flavor{Family::AffineC, 5}, 1) == 10);
  CHECK(sigma_vertex(Flavor{Family::AffineC, 5}, 5) == 6);
  CHECK(sigma_vertex(Flavor{Family::FiniteB, 3}, 4) == 3);
  for (int v = 1; v <= 8; ++v) {
    const Flavor fl{Family::FiniteC, 4};
    CHECK(sigma_vertex(fl, sigma_vertex(fl, v)) == v);
    CHECK(sigma_vertex(fl, v) != v);
  }
  CHECK_THROWS_AS(sigma_vertex(kAffA10, 1), ValidationError);
  CHECK_THROWS_AS(sigma_vertex(kAffC4, 9), ValidationError);
}

TEST_CASE("sigma maps boundary arcs to equal labels") {
  for (Flavor fl : {kAffC4, kFinB5, Flavor{Family::FiniteC, 3}}) {
    std::map<std::pair<int, int>, int> label_at;
    for (const auto& a : labeling(fl))
      label_at[{std::min(a.tail, a.head), std::max(a.tail, a.head)}] = a.label;
    for (const auto& a : labeling(fl)) {
      int u = sigma_vertex(fl, a.tail), v = sigma_vertex(fl, a.head);
      auto it = label_at.find({std::min(u, v), std::max(u, v)});
      REQUIRE(it != label_at.end());
      CHECK(it->second == a.label);
    }
  }
}

TEST_CASE("epsilon conversion") {
  SUBCASE("affine A: alpha_0 + .. + alpha_8 = e10 - e9 + d") {
    RootVector v{{1, 1, 1, 1, 1, 1, 1, 1, 1, 0}};
    EpsilonForm e = to_epsilon(kAffA10, v);
    CHECK(e.delta == 1);
    CHECK(e.eps == std::vector<std::int64_t>{0, 0, 0, 0, 0, 0, 0, 0, -1, 1});
  }
  SUBCASE("delta of affine C is pure d") {
    for (Flavor fl : {kAffC1, kAffC4}) {
      EpsilonForm e = to_epsilon(fl, delta_vector(fl));
      CHECK(e.delta == 1);
      for (auto c : e.eps) CHECK(c == 0);
    }
  }
  SUBCASE("finite A: alpha_1+..+alpha_4 = e1 - e5") {
    RootVector v{{1, 1, 1, 1, 0, 0, 0, 0}};
    EpsilonForm e = to_epsilon(kFinA9, v);
    CHECK(e.delta == 0);
    CHECK(e.eps == std::vector<std::int64_t>{1, 0, 0, 0, -1, 0, 0, 0, 0});
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(to_epsilon(kFinA9, RootVector{{1, 2}}), ValidationError);
  }
}

TEST_CASE("epsilon conversion is injective on the root lattice") {
  for (Flavor fl : {Flavor{Family::AffineA, 5}, kAffC4, Flavor{Family::FiniteA, 6},
                    Flavor{Family::FiniteB, 3}, Flavor{Family::FiniteC, 3},
                    kAffC1, Flavor{Family::FiniteC, 1}}) {
    IntMatrix m;
    for (int i = 0; i < fl.root_count(); ++i) {
      RootVector v = zero_root_vector(fl);
      v.coeffs[i] = 1;
      EpsilonForm e = to_epsilon(fl, v);
      auto row = e.eps;
      row.push_back(e.delta);
      m.push_back(std::move(row));
    }
    CHECK(rank_exact(m) == fl.root_count());
  }
}

namespace {

// Inverse substitution, written independently of to_epsilon.
RootVector from_epsilon(const Flavor& fl, const EpsilonForm& e) {
  RootVector c = zero_root_vector(fl);
  switch (fl.family) {
    case Family::AffineA: {
      int n = fl.rank;
      c.coeffs[0] = e.delta;
      std::int64_t acc = e.delta;
      for (int i = 1; i <= n - 1; ++i) {
        acc += e.eps[i - 1];
        c.coeffs[i] = acc;
      }
      break;
    }
    case Family::FiniteA: {
      std::int64_t acc = 0;
      for (int i = 1; i <= fl.rank - 1; ++i) {
        acc += e.eps[i - 1];
        c.coeffs[i - 1] = acc;
      }
      break;
    }
    case Family::AffineC: {
      int r = fl.rank;
      c.coeffs[0] = e.delta;
      std::int64_t prev = 0;
      if (r >= 2) {
        c.coeffs[1] = e.eps[0] + 2 * e.delta;
        prev = c.coeffs[1];
        for (int i = 2; i <= r - 1; ++i) {
          c.coeffs[i] = e.eps[i - 1] + prev;
          prev = c.coeffs[i];
        }
        c.coeffs[r] = (e.eps[r - 1] + prev) / 2;
      } else {
        c.coeffs[1] = (e.eps[0] + 2 * e.delta) / 2;
      }
      break;
    }
    case Family::FiniteB:
    case Family::FiniteC: {
      int r = fl.rank;
      std::int64_t prev = 0;
      for (int i = 1; i <= r - 1; ++i) {
        c.coeffs[i - 1] = e.eps[i - 1] + prev;
        prev = c.coeffs[i - 1];
      }
      std::int64_t last = e.eps[r - 1] + prev;
      c.coeffs[r - 1] = fl.family == Family::FiniteC ? last / 2 : last;
      break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("epsilon round trip on random lattice vectors") {
  std::uint64_t state = 7;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::int64_t>((state >> 33) % 19) - 9;
  };
  for (Flavor fl : {Flavor{Family::AffineA, 7}, kAffC4, kAffC1,
                    Flavor{Family::FiniteA, 6}, Flavor{Family::FiniteB, 4},
                    Flavor{Family::FiniteC, 4}, Flavor{Family::FiniteC, 1}}) {
    for (int trial = 0; trial < 50; ++trial) {
      RootVector v = zero_root_vector(fl);
      for (auto& c : v.coeffs) c = next();
      CHECK(from_epsilon(fl, to_epsilon(fl, v)) == v);
    }
  }
}

TEST_CASE("full cascade anchors") {
  SUBCASE("finite A") {
    auto a4 = full_cascade_anchor(Flavor{Family::FiniteA, 4});
    REQUIRE(a4.size() == 2);
    CHECK(a4[0].coeffs == std::vector<std::int64_t>{1, 1, 1});   // e1 - e4
    CHECK(a4[1].coeffs == std::vector<std::int64_t>{0, 1, 0});   // e2 - e3
    auto a2 = full_cascade_anchor(Flavor{Family::FiniteA, 2});
    REQUIRE(a2.size() == 1);
    CHECK(a2[0].coeffs == std::vector<std::int64_t>{1});
  }
  SUBCASE("finite C evaluates to 2e_i") {
    const Flavor fl{Family::FiniteC, 3};
    auto a = full_cascade_anchor(fl);
    REQUIRE(a.size() == 3);
    for (int i = 0; i < 3; ++i) {
      EpsilonForm e = to_epsilon(fl, a[i]);
      for (int k = 0; k < 3; ++k) CHECK(e.eps[k] == (k == i ? 2 : 0));
    }
  }
  SUBCASE("affine flavors are rejected") {
    CHECK_THROWS_AS(full_cascade_anchor(kAffC4), ValidationError);
  }
}

TEST_CASE("epsilon display form") {
  CHECK(epsilon_to_string(to_epsilon(kAffC4, delta_vector(kAffC4))) == "d");
  CHECK(epsilon_to_string({{1, 0, 0, 0, -1, 0, 0, 0, 0}, 0}) == "e1-e5");
  CHECK(epsilon_to_string({{-2, 0, 0, 0}, 1}) == "d-2e1");
  CHECK(epsilon_to_string({{}, 0}) == "0");
}
