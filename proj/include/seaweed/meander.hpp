#pragma once

#include <array>
#include <optional>
#include <vector>

#include "seaweed/roots.hpp"

namespace seaweed {

enum class Side { Outer, Inner };

const char* side_name(Side s);

// The removed simple-root index sets I (outer) and I' (inner).  Affine
// flavors need both nonempty, otherwise the seaweed is infinite-dimensional.
struct CutPair {
  std::vector<int> outer;
  std::vector<int> inner;

  auto operator<=>(const CutPair&) const = default;
};

// Sorts and deduplicates both sets.
CutPair normalize_cuts(CutPair cuts);
void validate_cuts(const Flavor& fl, const CutPair& cuts);  // throws ValidationError

// One arc of the meander graph.  The shadow runs clockwise along the
// boundary from `from` to `to`; beta(arc) is the shadow read as a
// root-lattice vector.  Entry values are 0, 1 or 2.
struct Arc {
  int id;
  Side side;
  int from;
  int to;
  RootVector shadow;
  bool affine;  // shadow contains alpha_0

  bool touches(int v) const { return from == v || to == v; }
  int other_end(int v) const { return from == v ? to : from; }

  auto operator<=>(const Arc&) const = default;
};

struct MeanderGraph {
  Flavor flavor;
  CutPair cuts;
  std::vector<Arc> arcs;
  // incidence[v-1][side]: arc id at vertex v on that side, or -1
  std::vector<std::array<int, 2>> incidence;

  int vertices() const { return flavor.vertex_count(); }
  int arc_at(int vertex, Side s) const {
    return incidence[vertex - 1][s == Side::Outer ? 0 : 1];
  }
  int degree(int vertex) const {
    return (arc_at(vertex, Side::Outer) >= 0 ? 1 : 0) +
           (arc_at(vertex, Side::Inner) >= 0 ? 1 : 0);
  }
};

MeanderGraph build_graph(const Flavor& fl, CutPair cuts);

enum class ComponentKind { Cycle, Segment };

// A connected component of the meander graph, in traversal order.  For a
// cycle, the traversal starts at the smallest vertex and leaves along its
// outer arc; for a segment it starts at the smaller endpoint.  arc_ids[k]
// joins vertices[k] and vertices[k+1] (a cycle's last arc closes up).
struct Component {
  ComponentKind kind;
  std::vector<int> vertices;
  std::vector<int> arc_ids;
  int affine_arc_count = 0;
  std::optional<bool> sigma_stable;  // engaged for B/C families only

  int min_vertex() const { return vertices.front(); }

  bool operator==(const Component&) const = default;
};

std::vector<Component> components(const MeanderGraph& g);

struct Census {
  int cycles = 0;
  int segments = 0;
  int nonsigma_segments = 0;
};

Census take_census(const Flavor& fl, const std::vector<Component>& comps);

}  // namespace seaweed
