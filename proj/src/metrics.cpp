#include "netcolor/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace netcolor {

double fraction_defective(const Graph& g, const Coloring& col) {
  const std::size_t m = g.edge_count();
  if (m == 0) return 0.0;
  return static_cast<double>(count_defective_edges(g, col)) / static_cast<double>(m);
}

Graph defective_subgraph(const Graph& g, const Coloring& col) {
  std::vector<Edge> kept;
  const std::size_t n = g.node_count();
  for (NodeId u = 0; u < n; ++u) {
    const int own = col.colors[u];
    for (NodeId v : g.neighbors(u)) {
      if (v > u && col.colors[v] == own) kept.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, kept);
}

std::size_t r_max(const Graph& g, const Coloring& col) {
  if (g.node_count() == 0) throw std::invalid_argument("r_max: empty graph");
  const auto labeling = connected_components(defective_subgraph(g, col));
  return *std::max_element(labeling.component_sizes.begin(), labeling.component_sizes.end());
}

std::size_t max_defective_degree(const Graph& g, const Coloring& col) {
  std::size_t best = 0;
  const std::size_t n = g.node_count();
  for (NodeId u = 0; u < n; ++u) {
    const int own = col.colors[u];
    std::size_t defective = 0;
    for (NodeId v : g.neighbors(u)) {
      if (col.colors[v] == own) ++defective;
    }
    best = std::max(best, defective);
  }
  return best;
}

MetricsRecord measure(const Graph& g, const Coloring& col) {
  if (g.node_count() == 0) throw std::invalid_argument("measure: empty graph");
  MetricsRecord rec;
  const Graph defective = defective_subgraph(g, col);
  rec.defective_edge_count = defective.edge_count();
  rec.f_d = g.edge_count() == 0
                ? 0.0
                : static_cast<double>(rec.defective_edge_count) / static_cast<double>(g.edge_count());
  rec.max_defective_degree = defective.max_degree();
  const auto labeling = connected_components(defective);
  rec.defective_component_sizes = labeling.component_sizes;
  rec.r_max = *std::max_element(rec.defective_component_sizes.begin(),
                                rec.defective_component_sizes.end());
  return rec;
}

}  // namespace netcolor
