#pragma once

#include <string>

#include "seaweed/index.hpp"

namespace seaweed::cli {

// Everything the canonical JSON document carries.  Field layout is fixed;
// downstream tooling diffs these documents across runs.
struct Report {
  Flavor flavor;
  CutPair cuts;
  int vertices = 0;
  std::vector<Arc> arcs;
  std::vector<Component> comps;
  int iota = 0;
  long long combinatorial = 0;
  std::optional<long long> tyj;
  std::optional<long long> brute;
  long long index_of_qhat = 0;

  bool operator==(const Report&) const = default;
};

Report make_report(const MeanderGraph& g, const std::vector<Component>& comps,
                   const IndexReport& rep);

std::string render_json(const Report& r);
Report parse_report(const std::string& json_text);  // inverse of render_json

std::string render_text(const Report& r);

std::string csv_header();
std::string csv_row(const Report& r);

// Graph emissions.  DOT uses neato position pins, one vertex per node,
// edge attributes side/affine and the beta label in epsilon coordinates.
std::string render_dot(const Report& r);
// TikZ puts outer arcs outside the boundary circle (above the line for
// finite flavors) and inner arcs inside (below).
std::string render_tikz(const Report& r);

}  // namespace seaweed::cli
