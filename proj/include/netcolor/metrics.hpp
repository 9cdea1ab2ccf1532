#pragma once

#include <cstddef>
#include <vector>

#include "netcolor/coloring.hpp"
#include "netcolor/graph.hpp"

namespace netcolor {

struct MetricsRecord {
  double f_d = 0.0;
  std::size_t r_max = 1;
  std::size_t defective_edge_count = 0;
  std::vector<std::size_t> defective_component_sizes;
  std::size_t max_defective_degree = 0;

  bool operator==(const MetricsRecord&) const = default;
};

// Fraction of edges whose endpoints share a color; 0 for edgeless graphs.
double fraction_defective(const Graph& g, const Coloring& col);

// Same node set, edges restricted to pairs with equal colors.
Graph defective_subgraph(const Graph& g, const Coloring& col);

// Node count of the largest connected component of the defective subgraph:
// the maximum number of nodes reachable from one node through defective
// edges. 1 under a proper coloring. Throws for an empty graph.
std::size_t r_max(const Graph& g, const Coloring& col);

// Maximum degree of the defective subgraph; 0 under a proper coloring.
std::size_t max_defective_degree(const Graph& g, const Coloring& col);

// All of the above in one pass over edges plus one component pass.
MetricsRecord measure(const Graph& g, const Coloring& col);

}  // namespace netcolor
