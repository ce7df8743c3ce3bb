#include "seaweed/tyj.hpp"

#include <algorithm>
#include <utility>

namespace seaweed {

namespace {

std::pair<int, int> sorted_ends(const Arc& a) {
  return {std::min(a.from, a.to), std::max(a.from, a.to)};
}

}  // namespace

std::vector<RootVector> beta_rows(const MeanderGraph& g, Side side) {
  std::vector<RootVector> rows;
  const bool sym = g.flavor.symmetric();
  for (const Arc& a : g.arcs) {
    if (a.side != side) continue;
    if (sym) {
      auto self = sorted_ends(a);
      std::pair<int, int> mate = {
          std::min(sigma_vertex(g.flavor, a.from), sigma_vertex(g.flavor, a.to)),
          std::max(sigma_vertex(g.flavor, a.from), sigma_vertex(g.flavor, a.to))};
      if (mate < self) continue;  // the partner arc represents this orbit
    }
    rows.push_back(a.shadow);
  }
  return rows;
}

IntMatrix rows_to_matrix(const std::vector<RootVector>& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(r.coeffs);
  return m;
}

long long tyj_index(const MeanderGraph& g) {
  const auto outer = beta_rows(g, Side::Outer);
  const auto inner = beta_rows(g, Side::Inner);
  const int dim_outer = rank_exact(rows_to_matrix(outer));
  const int dim_inner = rank_exact(rows_to_matrix(inner));
  IntMatrix stacked = rows_to_matrix(outer);
  for (const auto& r : inner) stacked.push_back(r.coeffs);
  const int dim_sum = rank_exact(std::move(stacked));
  return static_cast<long long>(g.flavor.root_count()) + dim_outer + dim_inner -
         2LL * dim_sum;
}

}  // namespace seaweed
