#include "seaweed/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "seaweed/cli/render.hpp"
#include "seaweed/cli/sweep.hpp"
#include "seaweed/tyj.hpp"

namespace seaweed::cli {

namespace {

constexpr const char* kNumberingNote =
    "Vertices are numbered 1..N clockwise around the circle (left to right "
    "on the line for finite families); conventions that label vertices with "
    "residues 0..N-1 correspond to this one by mapping 0 to N.";

struct FlavorArgs {
  std::string family;
  int n = -1;
  int r = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "algebra family: affine-a, affine-c, finite-a, finite-b, finite-c")
        ->required();
    cmd->add_option("--n", n, "rank parameter of the A families (vertex count)");
    cmd->add_option("--r", r, "rank parameter of the B/C families");
  }

  Flavor resolve() const {
    const Family fam = family_from_name(family);
    const bool a_family = fam == Family::AffineA || fam == Family::FiniteA;
    if (a_family) {
      if (n < 0)
        throw ValidationError("family " + family + " needs --n");
      if (r >= 0)
        throw ValidationError("family " + family + " takes --n, not --r");
      return Flavor{fam, n};
    }
    if (r < 0)
      throw ValidationError("family " + family + " needs --r");
    if (n >= 0)
      throw ValidationError("family " + family + " takes --r, not --n");
    return Flavor{fam, r};
  }
};

struct CutArgs {
  std::vector<int> outer, inner;
  std::string outer_set, inner_set;
  CLI::Option* outer_set_opt = nullptr;
  CLI::Option* inner_set_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--outer", outer,
                    "removed simple-root indices of the outer side (the set I)")
        ->delimiter(',');
    cmd->add_option("--inner", inner,
                    "removed simple-root indices of the inner side (the set I')")
        ->delimiter(',');
    outer_set_opt = cmd->add_option(
        "--outer-set", outer_set,
        "kept outer simple-root indices (the set S), comma separated; \"\" keeps none");
    inner_set_opt = cmd->add_option(
        "--inner-set", inner_set,
        "kept inner simple-root indices (the set S'), comma separated; \"\" keeps none");
    outer_set_opt->excludes("--outer");
    inner_set_opt->excludes("--inner");
  }

  static std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty()) continue;
      std::size_t used = 0;
      int v;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ValidationError("bad index '" + tok + "' in a kept-root list");
      }
      if (used != tok.size())
        throw ValidationError("bad index '" + tok + "' in a kept-root list");
      out.push_back(v);
    }
    return out;
  }

  static std::vector<int> complement(const Flavor& fl, const std::vector<int>& kept) {
    std::set<int> kept_set(kept.begin(), kept.end());
    const int lo = fl.root_index_base();
    for (int i : kept)
      if (i < lo || i >= lo + fl.root_count())
        throw ValidationError("kept index " + std::to_string(i) +
                              " out of range for " + fl.describe());
    std::vector<int> removed;
    for (int i = lo; i < lo + fl.root_count(); ++i)
      if (!kept_set.count(i)) removed.push_back(i);
    return removed;
  }

  CutPair resolve(const Flavor& fl) const {
    CutPair cuts;
    cuts.outer = outer_set_opt->count() ? complement(fl, parse_list(outer_set)) : outer;
    cuts.inner = inner_set_opt->count() ? complement(fl, parse_list(inner_set)) : inner;
    return normalize_cuts(std::move(cuts));
  }
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file " + path);
  out << content;
}

Report build_full_report(const Flavor& fl, const CutPair& cuts,
                         const PipelineOptions& opts) {
  const MeanderGraph g = build_graph(fl, cuts);
  const auto comps = components(g);
  IndexReport rep;
  rep.flavor = fl;
  rep.cuts = g.cuts;
  rep.census = take_census(fl, comps);
  rep.iota = iota_correction(comps);
  rep.combinatorial = combinatorial_index(fl, comps);
  if (opts.with_tyj) rep.tyj = tyj_index(g);
  if (opts.with_brute) {
    rep.brute = brute_index_for(fl, g.cuts, opts.trials, opts.seed);
    if (*rep.brute != rep.combinatorial && opts.trials < 25)
      rep.brute = brute_index_for(fl, g.cuts, 25, opts.seed);
  }
  return make_report(g, comps, rep);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{std::string("seaweed: index of seaweed subalgebras via meander graphs.\n") +
               kNumberingNote};
  app.require_subcommand(1);

  // ---- index ----
  auto* cmd_index = app.add_subcommand(
      "index", "compute the index of one seaweed and cross-check it");
  FlavorArgs index_flavor;
  CutArgs index_cuts;
  index_flavor.attach(cmd_index);
  index_cuts.attach(cmd_index);
  bool opt_brute = false, opt_no_tyj = false;
  int opt_trials = 5;
  std::uint64_t opt_seed = kDefaultSeed;
  std::string opt_format = "text", opt_output;
  cmd_index->add_flag("--brute", opt_brute,
                      "also run the structure-constant skew-form oracle (A families)");
  cmd_index->add_flag("--no-tyj", opt_no_tyj, "skip the rank-formula oracle");
  cmd_index->add_option("--trials", opt_trials, "random functionals per skew-form run")
      ->check(CLI::PositiveNumber);
  cmd_index->add_option("--seed", opt_seed, "seed of the deterministic functional stream");
  cmd_index->add_option("--format", opt_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_index->add_option("--output,-o", opt_output, "write to a file instead of stdout");

  // ---- graph ----
  auto* cmd_graph = app.add_subcommand("graph", "emit the meander graph itself");
  FlavorArgs graph_flavor;
  CutArgs graph_cuts;
  graph_flavor.attach(cmd_graph);
  graph_cuts.attach(cmd_graph);
  std::string graph_format = "dot", graph_output;
  cmd_graph->add_option("--format", graph_format, "dot, tikz or json")
      ->check(CLI::IsMember({"dot", "tikz", "json"}));
  cmd_graph->add_option("--output,-o", graph_output, "write to a file instead of stdout");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand(
      "verify", "exhaustively check the formulas against the rank oracle");
  VerifyOptions vopts;
  std::vector<std::string> verify_families;
  std::string verify_output;
  cmd_verify->add_option("--families", verify_families,
                         "subset of families to sweep (default: all)")
      ->delimiter(',');
  cmd_verify->add_option("--max-n", vopts.max_n, "A-family bound (default 8)");
  cmd_verify->add_option("--max-r", vopts.max_r, "B/C-family bound (default 5)");
  cmd_verify->add_flag("--brute", vopts.with_brute,
                       "also run the skew-form oracle on the A families");
  cmd_verify->add_option("--brute-max-n", vopts.brute_max_n,
                         "largest rank handed to the skew-form oracle (default 6)");
  cmd_verify->add_option("--trials", vopts.trials, "functionals per skew-form run")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--seed", vopts.seed, "seed of the functional stream");
  bool no_invariants = false;
  cmd_verify->add_flag("--no-invariants", no_invariants,
                       "skip the per-instance structural checks");
  cmd_verify->add_option("--threads,-j", vopts.threads,
                         "worker threads (default: SEAWEED_THREADS or all cores)");
  cmd_verify->add_option("--budget", vopts.budget,
                         "refuse sweeps beyond this many instances");
  cmd_verify->add_option("--output,-o", verify_output, "write the summary to a file");

  // ---- table ----
  auto* cmd_table = app.add_subcommand("table", "sweep instances into a CSV table");
  TableOptions topts;
  std::string table_family, table_cut_mode = "maximal", table_output;
  CutArgs table_cuts;
  cmd_table->add_option("--family", table_family, "family to sweep")->required();
  cmd_table->add_option("--rank-min", topts.rank_min, "first rank")->required();
  cmd_table->add_option("--rank-max", topts.rank_max, "last rank")->required();
  cmd_table->add_option("--cuts", table_cut_mode,
                        "maximal (all single-cut pairs), empty (finite only), fixed")
      ->check(CLI::IsMember({"maximal", "empty", "fixed"}));
  table_cuts.attach(cmd_table);
  cmd_table->add_option("--threads,-j", topts.threads, "worker threads");
  cmd_table->add_option("--output,-o", table_output, "write the CSV to a file");

  // ---- closed-form ----
  auto* cmd_closed = app.add_subcommand(
      "closed-form", "evaluate the closed-form index of the maximal-cut families");
  cmd_closed->require_subcommand(1);
  auto* cf_gcd = cmd_closed->add_subcommand(
      "gcd", "affine type A with cuts I={0}, I'={d}: gcd(n,2d) minus the parity correction");
  long long cf_n = 0, cf_d = 0;
  cf_gcd->add_option("--n", cf_n, "vertex count")->required();
  cf_gcd->add_option("--d", cf_d, "position of the inner cut, 1 <= d <= n/2")->required();
  auto* cf_cmax = cmd_closed->add_subcommand(
      "cmax", "affine type C with cuts I={i}, I'={j}: r+1 when i=j, else r-1");
  long long cf_r = 0, cf_i = 0, cf_j = 0;
  cf_cmax->add_option("--r", cf_r, "rank")->required();
  cf_cmax->add_option("--i", cf_i, "outer cut index")->required();
  cf_cmax->add_option("--j", cf_j, "inner cut index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_index->parsed()) {
      const Flavor fl = index_flavor.resolve();
      const CutPair cuts = index_cuts.resolve(fl);
      PipelineOptions popts;
      popts.with_tyj = !opt_no_tyj;
      popts.with_brute = opt_brute;
      popts.trials = opt_trials;
      popts.seed = opt_seed;
      const Report rep = build_full_report(fl, cuts, popts);
      std::string text;
      if (opt_format == "json")
        text = render_json(rep);
      else if (opt_format == "csv")
        text = csv_header() + "\n" + csv_row(rep) + "\n";
      else
        text = render_text(rep);
      write_output(opt_output, text);
      const bool agree = (!rep.tyj || *rep.tyj == rep.combinatorial) &&
                         (!rep.brute || *rep.brute == rep.combinatorial);
      return agree ? 0 : 3;
    }

    if (cmd_graph->parsed()) {
      const Flavor fl = graph_flavor.resolve();
      const CutPair cuts = graph_cuts.resolve(fl);
      const Report rep = build_full_report(fl, cuts, PipelineOptions{});
      std::string text;
      if (graph_format == "tikz")
        text = render_tikz(rep);
      else if (graph_format == "json")
        text = render_json(rep);
      else
        text = render_dot(rep);
      write_output(graph_output, text);
      return 0;
    }

    if (cmd_verify->parsed()) {
      vopts.check_invariants = !no_invariants;
      if (!verify_families.empty()) {
        vopts.families.clear();
        for (const auto& name : verify_families)
          vopts.families.push_back(family_from_name(name));
      }
      const VerifyResult res = run_verify(vopts);
      write_output(verify_output, render_verify_summary(res));
      return res.ok() ? 0 : 3;
    }

    if (cmd_table->parsed()) {
      topts.flavor = Flavor{family_from_name(table_family), topts.rank_max};
      if (table_cut_mode == "maximal")
        topts.mode = TableOptions::CutMode::Maximal;
      else if (table_cut_mode == "empty")
        topts.mode = TableOptions::CutMode::Empty;
      else {
        topts.mode = TableOptions::CutMode::Fixed;
        topts.fixed = table_cuts.resolve(Flavor{topts.flavor.family, topts.rank_min});
      }
      write_output(table_output, run_table_csv(topts));
      return 0;
    }

    if (cf_gcd->parsed()) {
      std::cout << closed_form_gcd(cf_n, cf_d) << "\n";
      return 0;
    }
    if (cf_cmax->parsed()) {
      std::cout << closed_form_cmax(cf_r, cf_i, cf_j) << "\n";
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace seaweed::cli
