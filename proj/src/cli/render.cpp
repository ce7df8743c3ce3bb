#include "seaweed/cli/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace seaweed::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x + 0.0);  // normalize -0
  return buf;
}

std::string beta_label(const Flavor& fl, const Arc& a) {
  return epsilon_to_string(to_epsilon(fl, a.shadow));
}

// Vertex 1 sits on top; numbers grow clockwise.
std::pair<double, double> circle_pos(int v, int n, double radius) {
  const double pi = 3.14159265358979323846;
  double theta = pi / 2 - 2 * pi * (v - 1) / n;
  return {radius * std::cos(theta), radius * std::sin(theta)};
}

}  // namespace

Report make_report(const MeanderGraph& g, const std::vector<Component>& comps,
                   const IndexReport& rep) {
  Report r;
  r.flavor = g.flavor;
  r.cuts = g.cuts;
  r.vertices = g.vertices();
  r.arcs = g.arcs;
  r.comps = comps;
  r.iota = rep.iota;
  r.combinatorial = rep.combinatorial;
  r.tyj = rep.tyj;
  r.brute = rep.brute;
  r.index_of_qhat = rep.index_of_qhat();
  return r;
}

std::string render_json(const Report& r) {
  ordered_json j;
  j["flavor"] = {{"family", family_name(r.flavor.family)}, {"rank", r.flavor.rank}};
  j["outer"] = r.cuts.outer;
  j["inner"] = r.cuts.inner;
  j["vertices"] = r.vertices;
  j["arcs"] = ordered_json::array();
  for (const Arc& a : r.arcs) {
    ordered_json ja;
    ja["id"] = a.id;
    ja["side"] = side_name(a.side);
    ja["from"] = a.from;
    ja["to"] = a.to;
    ja["shadow"] = a.shadow.coeffs;
    ja["affine"] = a.affine;
    j["arcs"].push_back(std::move(ja));
  }
  j["components"] = ordered_json::array();
  for (const Component& c : r.comps) {
    ordered_json jc;
    jc["kind"] = c.kind == ComponentKind::Cycle ? "cycle" : "segment";
    jc["vertices"] = c.vertices;
    jc["arcIds"] = c.arc_ids;
    if (c.sigma_stable.has_value())
      jc["sigmaStable"] = *c.sigma_stable;
    else
      jc["sigmaStable"] = nullptr;
    jc["affineArcs"] = c.affine_arc_count;
    j["components"].push_back(std::move(jc));
  }
  j["iota"] = r.iota;
  ordered_json ji;
  if (r.tyj)
    ji["combinatorial"] = r.combinatorial, ji["tyj"] = *r.tyj;
  else
    ji["combinatorial"] = r.combinatorial, ji["tyj"] = nullptr;
  if (r.brute)
    ji["brute"] = *r.brute;
  else
    ji["brute"] = nullptr;
  j["index"] = std::move(ji);
  j["indexOfQhat"] = r.index_of_qhat;
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& json_text) {
  const auto j = ordered_json::parse(json_text);
  Report r;
  r.flavor.family = family_from_name(j.at("flavor").at("family").get<std::string>());
  r.flavor.rank = j.at("flavor").at("rank").get<int>();
  r.cuts.outer = j.at("outer").get<std::vector<int>>();
  r.cuts.inner = j.at("inner").get<std::vector<int>>();
  r.vertices = j.at("vertices").get<int>();
  for (const auto& ja : j.at("arcs")) {
    Arc a;
    a.id = ja.at("id").get<int>();
    const std::string side = ja.at("side").get<std::string>();
    if (side != "outer" && side != "inner")
      throw ValidationError("bad arc side '" + side + "'");
    a.side = side == "outer" ? Side::Outer : Side::Inner;
    a.from = ja.at("from").get<int>();
    a.to = ja.at("to").get<int>();
    a.shadow.coeffs = ja.at("shadow").get<std::vector<std::int64_t>>();
    a.affine = ja.at("affine").get<bool>();
    r.arcs.push_back(std::move(a));
  }
  for (const auto& jc : j.at("components")) {
    Component c;
    const std::string kind = jc.at("kind").get<std::string>();
    if (kind != "cycle" && kind != "segment")
      throw ValidationError("bad component kind '" + kind + "'");
    c.kind = kind == "cycle" ? ComponentKind::Cycle : ComponentKind::Segment;
    c.vertices = jc.at("vertices").get<std::vector<int>>();
    c.arc_ids = jc.at("arcIds").get<std::vector<int>>();
    if (!jc.at("sigmaStable").is_null())
      c.sigma_stable = jc.at("sigmaStable").get<bool>();
    c.affine_arc_count = jc.at("affineArcs").get<int>();
    r.comps.push_back(std::move(c));
  }
  r.iota = j.at("iota").get<int>();
  r.combinatorial = j.at("index").at("combinatorial").get<long long>();
  if (!j.at("index").at("tyj").is_null())
    r.tyj = j.at("index").at("tyj").get<long long>();
  if (!j.at("index").at("brute").is_null())
    r.brute = j.at("index").at("brute").get<long long>();
  r.index_of_qhat = j.at("indexOfQhat").get<long long>();
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  Census census;
  for (const auto& c : r.comps) {
    if (c.kind == ComponentKind::Cycle) {
      ++census.cycles;
    } else {
      ++census.segments;
      if (c.sigma_stable.has_value() && !*c.sigma_stable) ++census.nonsigma_segments;
    }
  }
  os << "flavor:         " << r.flavor.describe() << "\n";
  os << "outer cuts:     {" << join(r.cuts.outer, ",") << "}\n";
  os << "inner cuts:     {" << join(r.cuts.inner, ",") << "}\n";
  os << "vertices:       " << r.vertices << "\n";
  os << "arcs:           " << r.arcs.size() << "\n";
  os << "components:     " << census.cycles << " cycle(s), " << census.segments
     << " segment(s)";
  if (r.flavor.symmetric())
    os << " (" << census.nonsigma_segments << " not sigma-stable)";
  os << "\n";
  if (r.flavor.affine()) os << "iota:           " << r.iota << "\n";
  os << "index:          " << r.combinatorial << "\n";
  if (r.tyj)
    os << "tyj oracle:     " << *r.tyj
       << (*r.tyj == r.combinatorial ? " (agrees)" : " (DISAGREES)") << "\n";
  if (r.brute)
    os << "brute oracle:   " << *r.brute
       << (*r.brute == r.combinatorial ? " (agrees)" : " (DISAGREES)") << "\n";
  if (r.flavor.affine())
    os << "index of qhat:  " << r.index_of_qhat << "\n";
  return os.str();
}

std::string csv_header() {
  return "family,rank,outer,inner,cycles,segments,nonSigmaSegments,iota,index";
}

std::string csv_row(const Report& r) {
  Census census;
  for (const auto& c : r.comps) {
    if (c.kind == ComponentKind::Cycle) {
      ++census.cycles;
    } else {
      ++census.segments;
      if (c.sigma_stable.has_value() && !*c.sigma_stable) ++census.nonsigma_segments;
    }
  }
  std::ostringstream os;
  os << family_name(r.flavor.family) << "," << r.flavor.rank << ","
     << join(r.cuts.outer, ";") << "," << join(r.cuts.inner, ";") << ","
     << census.cycles << "," << census.segments << ","
     << census.nonsigma_segments << "," << r.iota << "," << r.combinatorial;
  return os.str();
}

std::string render_dot(const Report& r) {
  std::ostringstream os;
  os << "graph meander {\n";
  os << "  layout=neato;\n";
  os << "  node [shape=circle, fixedsize=true, width=0.35];\n";
  const int n = r.vertices;
  const bool affine = r.flavor.affine();
  for (int v = 1; v <= n; ++v) {
    double x, y;
    if (affine) {
      auto [cx, cy] = circle_pos(v, n, 1.8);
      x = cx, y = cy;
    } else {
      x = 0.8 * v, y = 0.0;
    }
    os << "  v" << v << " [pos=\"" << fixed3(x) << "," << fixed3(y) << "!\"];\n";
  }
  for (const Arc& a : r.arcs) {
    os << "  v" << a.from << " -- v" << a.to << " [side="
       << side_name(a.side) << ", affine=" << (a.affine ? "true" : "false")
       << ", label=\"" << beta_label(r.flavor, a) << "\"";
    if (a.side == Side::Inner) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

void tikz_circle_arc(std::ostringstream& os, const Arc& a, int n) {
  // Sample the clockwise boundary path from `from` to `to` just outside
  // (outer) or inside (inner) the circle, so the enclosed region hugs the
  // shadow and keeps the centre on the correct side.
  const double pi = 3.14159265358979323846;
  const double span = static_cast<double>(((a.to - a.from) % n + n) % n) / n;
  const double bulge = a.side == Side::Outer ? 3.55 + 0.6 * span : 2.45 - 0.6 * span;
  const int samples = std::max(1, static_cast<int>(span * 12));
  os << "  \\draw" << (a.side == Side::Inner ? "[densely dashed]" : "")
     << " plot[smooth] coordinates {";
  auto [x0, y0] = circle_pos(a.from, n, 3.0);
  os << "(" << fixed3(x0) << "," << fixed3(y0) << ")";
  for (int s = 1; s <= samples; ++s) {
    const double frac = static_cast<double>(s) / (samples + 1);
    const double theta = pi / 2 - 2 * pi * (a.from - 1 + frac * span * n) / n;
    os << " (" << fixed3(bulge * std::cos(theta)) << ","
       << fixed3(bulge * std::sin(theta)) << ")";
  }
  auto [x1, y1] = circle_pos(a.to, n, 3.0);
  os << " (" << fixed3(x1) << "," << fixed3(y1) << ")};\n";
}

}  // namespace

std::string render_tikz(const Report& r) {
  std::ostringstream os;
  const int n = r.vertices;
  os << "\\begin{tikzpicture}[scale=0.6]\n";
  if (r.flavor.affine()) {
    os << "  \\draw[blue!40, thin] (0,0) circle (3);\n";
    os << "  \\node at (0,0) {$\\bullet$};\n";
    for (int v = 1; v <= n; ++v) {
      auto [x, y] = circle_pos(v, n, 3.0);
      os << "  \\filldraw[gray] (" << fixed3(x) << "," << fixed3(y)
         << ") circle (2pt);\n";
      auto [lx, ly] = circle_pos(v, n, 3.45);
      os << "  \\node[font=\\scriptsize] at (" << fixed3(lx) << "," << fixed3(ly)
         << ") {" << v << "};\n";
    }
    for (const Arc& a : r.arcs) tikz_circle_arc(os, a, n);
  } else {
    os << "  \\draw[dotted] (0.5,0) -- (" << fixed3(n + 0.5) << ",0);\n";
    for (int v = 1; v <= n; ++v) {
      os << "  \\filldraw (" << v << ",0) circle (2pt);\n";
      os << "  \\node[font=\\scriptsize, below=6pt] at (" << v << ",0) {" << v
         << "};\n";
    }
    for (const Arc& a : r.arcs) {
      const double h = (0.35 + 0.22 * (a.to - a.from)) *
                       (a.side == Side::Outer ? 1.0 : -1.0);
      os << "  \\draw (" << a.from << ",0) .. controls (" << a.from << ","
         << fixed3(h) << ") and (" << a.to << "," << fixed3(h) << ") .. ("
         << a.to << ",0);\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace seaweed::cli
