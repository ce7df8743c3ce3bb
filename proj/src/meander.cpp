#include "seaweed/meander.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace seaweed {

const char* side_name(Side s) { return s == Side::Outer ? "outer" : "inner"; }

CutPair normalize_cuts(CutPair cuts) {
  auto clean = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  clean(cuts.outer);
  clean(cuts.inner);
  return cuts;
}

void validate_cuts(const Flavor& fl, const CutPair& cuts) {
  fl.validate();
  const int lo = fl.root_index_base();
  const int hi = lo + fl.root_count() - 1;
  auto check = [&](const std::vector<int>& v, const char* which) {
    if (fl.affine() && v.empty())
      throw ValidationError(std::string(which) +
                            " cut set must be nonempty for affine flavors "
                            "(a proper parabolic on each side)");
    for (int i : v)
      if (i < lo || i > hi)
        throw ValidationError(std::string(which) + " cut index " +
                              std::to_string(i) + " out of range " +
                              std::to_string(lo) + ".." + std::to_string(hi) +
                              " for " + fl.describe());
  };
  check(cuts.outer, "outer");
  check(cuts.inner, "inner");
}

namespace {

struct Run {
  std::vector<int> verts;    // consecutive vertices, clockwise
  std::vector<int> labels;   // labels of the boundary arcs between them
};

// Splits the boundary at the removed arcs into runs of consecutive vertices.
std::vector<Run> boundary_runs(const Flavor& fl, const std::vector<int>& cut) {
  const auto bnd = labeling(fl);
  const int m = static_cast<int>(bnd.size());
  std::set<int> removed_labels(cut.begin(), cut.end());
  std::vector<bool> removed(m, false);
  for (int k = 0; k < m; ++k)
    removed[k] = removed_labels.count(bnd[k].label) > 0;

  std::vector<Run> runs;
  if (fl.affine()) {
    int first_removed = -1;
    for (int k = 0; k < m; ++k)
      if (removed[k]) { first_removed = k; break; }
    if (first_removed < 0)
      throw InvariantViolation("affine cut removed no boundary arc");
    // Walk the circle once, starting just past the first removed arc.
    Run cur;
    cur.verts.push_back(bnd[first_removed].head);
    for (int step = 1; step <= m; ++step) {
      int k = (first_removed + step) % m;
      if (step == m) break;  // back at the first removed arc
      if (removed[k]) {
        runs.push_back(std::move(cur));
        cur = Run{};
        cur.verts.push_back(bnd[k].head);
      } else {
        cur.labels.push_back(bnd[k].label);
        cur.verts.push_back(bnd[k].head);
      }
    }
    runs.push_back(std::move(cur));
  } else {
    Run cur;
    cur.verts.push_back(1);
    for (int k = 0; k < m; ++k) {
      if (removed[k]) {
        runs.push_back(std::move(cur));
        cur = Run{};
        cur.verts.push_back(bnd[k].head);
      } else {
        cur.labels.push_back(bnd[k].label);
        cur.verts.push_back(bnd[k].head);
      }
    }
    runs.push_back(std::move(cur));
  }
  return runs;
}

}  // namespace

MeanderGraph build_graph(const Flavor& fl, CutPair cuts) {
  cuts = normalize_cuts(std::move(cuts));
  validate_cuts(fl, cuts);

  MeanderGraph g;
  g.flavor = fl;
  g.cuts = cuts;
  g.incidence.assign(fl.vertex_count(), {-1, -1});

  const int base = fl.root_index_base();
  for (Side side : {Side::Outer, Side::Inner}) {
    const auto& cut = side == Side::Outer ? cuts.outer : cuts.inner;
    for (const Run& run : boundary_runs(fl, cut)) {
      const int m = static_cast<int>(run.verts.size());
      for (int i = 0; i < m / 2; ++i) {
        Arc a;
        a.id = static_cast<int>(g.arcs.size());
        a.side = side;
        a.from = run.verts[i];
        a.to = run.verts[m - 1 - i];
        a.shadow = zero_root_vector(fl);
        for (int k = i; k < m - 1 - i; ++k)
          a.shadow.coeffs[run.labels[k] - base] += 1;
        a.affine = fl.affine() && a.shadow.coeffs[0] > 0;
        for (int v : {a.from, a.to}) {
          auto& slot = g.incidence[v - 1][side == Side::Outer ? 0 : 1];
          if (slot >= 0)
            throw InvariantViolation("vertex " + std::to_string(v) +
                                     " got two " + side_name(side) + " arcs");
          slot = a.id;
        }
        g.arcs.push_back(std::move(a));
      }
    }
  }
  return g;
}

namespace {

Component trace_from(const MeanderGraph& g, int start, Side first_side,
                     std::vector<bool>& seen) {
  Component c;
  c.vertices.push_back(start);
  seen[start - 1] = true;
  int v = start;
  Side next = first_side;
  while (true) {
    int aid = g.arc_at(v, next);
    if (aid < 0) break;
    const Arc& a = g.arcs[aid];
    int w = a.other_end(v);
    c.arc_ids.push_back(aid);
    if (w == start) break;  // closed a cycle
    c.vertices.push_back(w);
    seen[w - 1] = true;
    v = w;
    next = next == Side::Outer ? Side::Inner : Side::Outer;
  }
  return c;
}

}  // namespace

std::vector<Component> components(const MeanderGraph& g) {
  const Flavor& fl = g.flavor;
  const int n = g.vertices();
  std::vector<bool> seen(n, false);
  std::vector<Component> out;

  auto finish = [&](Component c) {
    c.kind = c.arc_ids.size() == c.vertices.size() ? ComponentKind::Cycle
                                                   : ComponentKind::Segment;
    for (int aid : c.arc_ids)
      if (g.arcs[aid].affine) ++c.affine_arc_count;
    if (fl.symmetric()) {
      std::set<int> vs(c.vertices.begin(), c.vertices.end());
      bool stable = true;
      for (int v : c.vertices)
        if (!vs.count(sigma_vertex(fl, v))) { stable = false; break; }
      c.sigma_stable = stable;
    }
    out.push_back(std::move(c));
  };

  // Segments first: start from each endpoint (degree < 2) in ascending order.
  for (int v = 1; v <= n; ++v) {
    if (seen[v - 1] || g.degree(v) == 2) continue;
    Side s = g.arc_at(v, Side::Outer) >= 0 ? Side::Outer : Side::Inner;
    finish(trace_from(g, v, s, seen));
  }
  // Remaining vertices all have degree 2 and lie on cycles.
  for (int v = 1; v <= n; ++v) {
    if (seen[v - 1]) continue;
    finish(trace_from(g, v, Side::Outer, seen));
  }

  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.min_vertex() < b.min_vertex();
  });
  return out;
}

Census take_census(const Flavor& fl, const std::vector<Component>& comps) {
  Census c;
  for (const auto& comp : comps) {
    if (comp.kind == ComponentKind::Cycle) {
      ++c.cycles;
    } else {
      ++c.segments;
      if (fl.symmetric() && comp.sigma_stable && !*comp.sigma_stable)
        ++c.nonsigma_segments;
    }
  }
  return c;
}

}  // namespace seaweed
