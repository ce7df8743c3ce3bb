// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit code 0 only if all pass.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "seaweed/checks.hpp"
#include "seaweed/cli/sweep.hpp"
#include "seaweed/tyj.hpp"

using namespace seaweed;
using namespace seaweed::cli;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && limit_seconds > 0 && dt > limit_seconds) {
    ok = false;
    note = "over the time limit of " + std::to_string(limit_seconds) + "s";
  }
  if (!ok) ++g_failures;
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), dt, note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
}

long long pipeline_index(const Flavor& fl, const CutPair& cuts) {
  const MeanderGraph g = build_graph(fl, cuts);
  return combinatorial_index(fl, components(g));
}

}  // namespace

int main() {
  // 1: the three reference affine type-A instances.
  criterion(1, "reference affine-A instances with their affine-arc censuses", 1.0,
            [](std::string& note) {
              struct Case {
                int n;
                CutPair cuts;
                long long index;
              };
              const Case cases[] = {{10, {{9}, {4, 8}}, 0},
                                    {9, {{3, 8}, {2, 6}}, 3},
                                    {8, {{1, 5}, {3, 7}}, 2}};
              // censuses: one 10-cycle with 3 affine arcs; one cycle with 2
              // affine arcs plus a segment; two cycles with odd counts.
              for (const auto& c : cases) {
                const Flavor fl{Family::AffineA, c.n};
                const IndexReport rep = compute_index(fl, c.cuts);
                if (rep.combinatorial != c.index || !rep.oracles_agree()) {
                  note = "index mismatch at n=" + std::to_string(c.n);
                  return false;
                }
              }
              const auto comps10 =
                  components(build_graph({Family::AffineA, 10}, {{9}, {4, 8}}));
              if (comps10.size() != 1 || comps10[0].affine_arc_count != 3)
                return false;
              const auto comps9 =
                  components(build_graph({Family::AffineA, 9}, {{3, 8}, {2, 6}}));
              int cycles9 = 0;
              for (const auto& c : comps9)
                if (c.kind == ComponentKind::Cycle) {
                  ++cycles9;
                  if (c.affine_arc_count != 2) return false;
                }
              if (cycles9 != 1 || comps9.size() != 2) return false;
              const auto comps8 =
                  components(build_graph({Family::AffineA, 8}, {{1, 5}, {3, 7}}));
              if (comps8.size() != 2) return false;
              for (const auto& c : comps8)
                if (c.kind != ComponentKind::Cycle || c.affine_arc_count % 2 != 1)
                  return false;
              return true;
            });

  // 2: closed form for I={0}, I'={d} and the matched-cut family.
  criterion(2, "affine-A closed forms up to n=60", 10.0, [](std::string& note) {
    struct Job {
      int n, d, i;
      bool matched;
    };
    std::vector<Job> jobs;
    for (int n = 2; n <= 60; ++n) {
      for (int d = 1; 2 * d <= n; ++d) jobs.push_back({n, d, 0, false});
      for (int i = 0; i < n; ++i) jobs.push_back({n, 0, i, true});
    }
    std::atomic<int> bad{0};
    parallel_for(jobs.size(), 0, [&](std::size_t k) {
      const Job& j = jobs[k];
      const Flavor fl{Family::AffineA, j.n};
      if (j.matched) {
        if (pipeline_index(fl, {{j.i}, {j.i}}) != j.n) ++bad;
      } else if (pipeline_index(fl, {{0}, {j.d}}) != closed_form_gcd(j.n, j.d)) {
        ++bad;
      }
    });
    if (bad) note = std::to_string(bad.load()) + " mismatches";
    return bad == 0;
  });

  // 3: affine-C maximal cuts closed form.
  criterion(3, "affine-C maximal-cut closed form up to r=30", 10.0,
            [](std::string& note) {
              struct Job {
                int r, i, j;
              };
              std::vector<Job> jobs;
              for (int r = 1; r <= 30; ++r)
                for (int i = 0; i <= r; ++i)
                  for (int j = 0; j <= r; ++j) jobs.push_back({r, i, j});
              std::atomic<int> bad{0};
              parallel_for(jobs.size(), 0, [&](std::size_t k) {
                const Job& j = jobs[k];
                const long long want = j.i == j.j ? j.r + 1 : j.r - 1;
                if (pipeline_index({Family::AffineC, j.r}, {{j.i}, {j.j}}) != want ||
                    closed_form_cmax(j.r, j.i, j.j) != want)
                  ++bad;
              });
              if (bad) note = std::to_string(bad.load()) + " mismatches";
              return bad == 0;
            });

  // 4: the finite type-A reference instance with its rank census.
  criterion(4, "finite-A reference instance and rank census 8+4+4-2*7", 1.0,
            [](std::string& note) {
              const Flavor fl{Family::FiniteA, 9};
              const MeanderGraph g = build_graph(fl, {{5, 7}, {2, 6}});
              const auto outer = beta_rows(g, Side::Outer);
              const auto inner = beta_rows(g, Side::Inner);
              IntMatrix stacked = rows_to_matrix(outer);
              for (const auto& r : inner) stacked.push_back(r.coeffs);
              const bool census = outer.size() == 4 && inner.size() == 4 &&
                                  rank_exact(rows_to_matrix(outer)) == 4 &&
                                  rank_exact(rows_to_matrix(inner)) == 4 &&
                                  rank_exact(stacked) == 7;
              const long long idx = combinatorial_index(fl, components(g));
              if (idx != 2 || tyj_index(g) != 2 || !census) {
                note = "index or census off";
                return false;
              }
              return true;
            });

  // 5+7 share one sweep: agreement everywhere, invariants everywhere.
  VerifyResult sweep;
  bool sweep_ran = false;
  criterion(5, "exhaustive combinatorial-vs-rank agreement at the stated bounds",
            120.0, [&](std::string& note) {
              VerifyOptions opts;
              opts.max_n = 8;
              opts.max_r = 5;
              opts.check_invariants = true;
              sweep = run_verify(opts);
              sweep_ran = true;
              if (sweep.disagreements != 0) {
                note = render_verify_summary(sweep);
                return false;
              }
              return true;
            });

  // 6: skew-form oracle agreement on the A families.
  criterion(6, "skew-form oracle agreement for the A families up to n=6", 300.0,
            [](std::string& note) {
              VerifyOptions opts;
              opts.families = {Family::AffineA, Family::FiniteA};
              opts.max_n = 6;
              opts.with_brute = true;
              opts.brute_max_n = 6;
              opts.trials = 5;
              opts.seed = kDefaultSeed;
              opts.check_invariants = false;
              const VerifyResult res = run_verify(opts);
              if (!res.ok()) {
                note = render_verify_summary(res);
                return false;
              }
              return true;
            });

  // 7: invariant suites (from the criterion-5 sweep) plus the uncut anchors.
  criterion(7, "invariant suites and full-Levi anchors at the same bounds", 0,
            [&](std::string& note) {
              if (!sweep_ran || sweep.violations != 0) {
                note = sweep_ran ? render_verify_summary(sweep) : "sweep missing";
                return false;
              }
              for (int n = 2; n <= 8; ++n) {
                const Flavor fl{Family::FiniteA, n};
                const MeanderGraph g = build_graph(fl, {{}, {}});
                std::multiset<RootVector> outer;
                for (const Arc& a : g.arcs)
                  if (a.side == Side::Outer) outer.insert(a.shadow);
                const auto anchor = full_cascade_anchor(fl);
                if (outer != std::multiset<RootVector>(anchor.begin(), anchor.end()))
                  return false;
              }
              for (Family fam : {Family::FiniteB, Family::FiniteC}) {
                for (int r = fam == Family::FiniteB ? 2 : 1; r <= 5; ++r) {
                  const Flavor fl{fam, r};
                  const MeanderGraph g = build_graph(fl, {{}, {}});
                  std::multiset<RootVector> outer;
                  for (const Arc& a : g.arcs)
                    if (a.side == Side::Outer) outer.insert(a.shadow);
                  const auto anchor = full_cascade_anchor(fl);
                  if (outer != std::multiset<RootVector>(anchor.begin(), anchor.end()))
                    return false;
                }
              }
              (void)note;
              return true;
            });

  // 8: byte-identical verify summaries on identical configuration.
  criterion(8, "deterministic verify summaries", 0, [](std::string& note) {
    VerifyOptions opts;
    opts.families = {Family::AffineA, Family::FiniteC};
    opts.max_n = 6;
    opts.max_r = 4;
    opts.threads = 4;
    const std::string a = render_verify_summary(run_verify(opts));
    const std::string b = render_verify_summary(run_verify(opts));
    if (a != b) {
      note = "summaries differ";
      return false;
    }
    return true;
  });

  if (g_failures == 0) std::printf("all acceptance criteria pass\n");
  return g_failures == 0 ? 0 : 1;
}
