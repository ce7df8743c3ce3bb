#include "seaweed/cli/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "seaweed/checks.hpp"
#include "seaweed/cli/render.hpp"
#include "seaweed/tyj.hpp"

namespace seaweed::cli {

unsigned default_threads() {
  if (const char* env = std::getenv("SEAWEED_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = default_threads();
  threads = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<std::vector<int>> enumerate_cut_sets(const Flavor& fl) {
  const int lo = fl.root_index_base();
  const int k = fl.root_count();
  if (k >= 25)
    throw ValidationError("cut-set enumeration at " + fl.describe() +
                          " is out of reach (2^" + std::to_string(k) + " sets)");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = fl.affine() ? 1 : 0; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) s.push_back(lo + b);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct Instance {
  Flavor flavor;
  const std::vector<int>* outer;
  const std::vector<int>* inner;
};

std::string cuts_string(const CutPair& cuts) {
  std::ostringstream os;
  os << "outer={";
  for (std::size_t i = 0; i < cuts.outer.size(); ++i)
    os << (i ? "," : "") << cuts.outer[i];
  os << "} inner={";
  for (std::size_t i = 0; i < cuts.inner.size(); ++i)
    os << (i ? "," : "") << cuts.inner[i];
  os << "}";
  return os.str();
}

// What one verify instance runs; returns an error note or empty.
struct InstanceOutcome {
  bool disagreement = false;
  bool violation = false;
  std::string what;
};

InstanceOutcome run_instance(const Flavor& fl, const CutPair& cuts,
                             const VerifyOptions& opts) {
  InstanceOutcome out;
  try {
    const MeanderGraph g = build_graph(fl, cuts);
    const auto comps = components(g);
    if (opts.check_invariants) {
      check_graph_invariants(g, comps);
      check_rank_invariants(g, comps);
    }
    const long long idx = combinatorial_index(fl, comps);
    const long long oracle = tyj_index(g);
    if (oracle != idx) {
      out.disagreement = true;
      out.what = "combinatorial index " + std::to_string(idx) +
                 " != rank-formula index " + std::to_string(oracle);
      return out;
    }
    if (opts.check_invariants) check_symmetry_invariants(fl, cuts, idx);
    const bool brutable = (fl.family == Family::AffineA || fl.family == Family::FiniteA) &&
                          fl.rank <= opts.brute_max_n;
    if (opts.with_brute && brutable) {
      long long b = brute_index_for(fl, cuts, opts.trials, opts.seed);
      if (b != idx && opts.trials < 25)
        b = brute_index_for(fl, cuts, 25, opts.seed);
      if (b != idx) {
        out.disagreement = true;
        out.what = "skew-form index " + std::to_string(b) +
                   " != combinatorial index " + std::to_string(idx);
        return out;
      }
    }
  } catch (const InvariantViolation& e) {
    out.violation = true;
    out.what = e.what();
  }
  return out;
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& opts) {
  VerifyResult res;

  // Count first; materializing an over-budget sweep could be enormous.
  for (Family fam : opts.families) {
    const bool a_family = fam == Family::AffineA || fam == Family::FiniteA;
    const int rank_lo = fam == Family::FiniteB ? 2 : (a_family ? 2 : 1);
    const int rank_hi = a_family ? opts.max_n : opts.max_r;
    for (int rank = rank_lo; rank <= rank_hi; ++rank) {
      const Flavor fl{fam, rank};
      fl.validate();
      if (fl.root_count() >= 25)
        throw ValidationError("verification bound too large for " + fl.describe());
      const std::uint64_t pool =
          (1ull << fl.root_count()) - (fl.affine() ? 1 : 0);
      res.tallies.push_back({fl, pool * pool});
      res.total += pool * pool;
    }
  }
  if (res.total > opts.budget)
    throw ValidationError("verification sweep of " + std::to_string(res.total) +
                          " instances exceeds the budget of " +
                          std::to_string(opts.budget) +
                          " (raise --budget to allow it)");

  // The instance list fixes the sweep order; the summary and the failure
  // order must not depend on scheduling.
  std::vector<std::vector<std::vector<int>>> cut_pools;
  std::vector<Instance> instances;
  instances.reserve(res.total);
  for (const auto& tally : res.tallies)
    cut_pools.push_back(enumerate_cut_sets(tally.flavor));
  std::size_t pool_idx = 0;
  for (const auto& tally : res.tallies) {
    const auto& pool = cut_pools[pool_idx++];
    for (const auto& outer : pool)
      for (const auto& inner : pool)
        instances.push_back({tally.flavor, &outer, &inner});
  }

  std::vector<InstanceOutcome> outcomes(instances.size());
  parallel_for(instances.size(), opts.threads, [&](std::size_t i) {
    outcomes[i] =
        run_instance(instances[i].flavor,
                     CutPair{*instances[i].outer, *instances[i].inner}, opts);
  });

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& oc = outcomes[i];
    if (!oc.disagreement && !oc.violation) continue;
    if (oc.disagreement) ++res.disagreements;
    if (oc.violation) ++res.violations;
    if (res.first_failures.size() < 5)
      res.first_failures.push_back(
          {instances[i].flavor,
           CutPair{*instances[i].outer, *instances[i].inner}, oc.what});
  }
  return res;
}

std::string render_verify_summary(const VerifyResult& res) {
  std::ostringstream os;
  os << "verify summary\n";
  for (const auto& t : res.tallies)
    os << "  " << t.flavor.describe() << ": " << t.instances << " instances\n";
  os << "total instances: " << res.total << "\n";
  os << "disagreements:   " << res.disagreements << "\n";
  os << "violations:      " << res.violations << "\n";
  for (const auto& f : res.first_failures)
    os << "counterexample: " << f.flavor.describe() << " " << cuts_string(f.cuts)
       << ": " << f.what << "\n";
  os << (res.ok() ? "result: OK" : "result: FAILED") << "\n";
  return os.str();
}

std::string run_table_csv(const TableOptions& opts) {
  struct Row {
    Flavor flavor;
    CutPair cuts;
  };
  std::vector<Row> rows;
  for (int rank = opts.rank_min; rank <= opts.rank_max; ++rank) {
    const Flavor fl{opts.flavor.family, rank};
    fl.validate();
    const int lo = fl.root_index_base();
    const int hi = lo + fl.root_count() - 1;
    switch (opts.mode) {
      case TableOptions::CutMode::Maximal:
        for (int i = lo; i <= hi; ++i)
          for (int j = lo; j <= hi; ++j)
            rows.push_back({fl, CutPair{{i}, {j}}});
        break;
      case TableOptions::CutMode::Empty:
        if (fl.affine())
          throw ValidationError("empty cuts are only valid for finite flavors");
        rows.push_back({fl, CutPair{{}, {}}});
        break;
      case TableOptions::CutMode::Fixed:
        rows.push_back({fl, opts.fixed});
        break;
    }
  }
  std::vector<std::string> lines(rows.size());
  parallel_for(rows.size(), opts.threads, [&](std::size_t i) {
    const MeanderGraph g = build_graph(rows[i].flavor, rows[i].cuts);
    const auto comps = components(g);
    IndexReport rep;
    rep.flavor = rows[i].flavor;
    rep.cuts = g.cuts;
    rep.census = take_census(rows[i].flavor, comps);
    rep.iota = iota_correction(comps);
    rep.combinatorial = combinatorial_index(rows[i].flavor, comps);
    lines[i] = csv_row(make_report(g, comps, rep));
  });
  std::ostringstream os;
  os << csv_header() << "\n";
  for (const auto& line : lines) os << line << "\n";
  return os.str();
}

}  // namespace seaweed::cli
