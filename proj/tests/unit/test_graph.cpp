#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "netcolor/generators.hpp"
#include "netcolor/graph.hpp"

using namespace netcolor;

TEST_CASE("triangle construction") {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  for (NodeId u = 0; u < 3; ++u) CHECK(g.degree(u) == 2);
}

TEST_CASE("duplicate pairs and reversed duplicates collapse") {
  const Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("self-loops are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("out-of-range endpoints are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  const Graph g = Graph::from_edges(2, {{0, 1}});
  CHECK_THROWS_AS(g.degree(2), std::out_of_range);
  CHECK_THROWS_AS(g.neighbors(5), std::out_of_range);
}

TEST_CASE("degree examples") {
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(star.degree(0) == 3);
  CHECK(star.degree(1) == 1);

  const Graph with_isolated = Graph::from_edges(3, {{0, 1}});
  CHECK(with_isolated.degree(2) == 0);

  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(path.degree(1) == 2);
}

TEST_CASE("adjacency is sorted and symmetric") {
  const Graph g = gen_er(60, 0.2, 99);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto neigh = g.neighbors(u);
    CHECK(std::is_sorted(neigh.begin(), neigh.end()));
    for (NodeId v : neigh) {
      const auto back = g.neighbors(v);
      CHECK(std::binary_search(back.begin(), back.end(), u));
      CHECK(v != u);
    }
  }
}

TEST_CASE("handshake lemma on random graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gen_er(80, 0.1, seed);
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) degree_sum += g.degree(u);
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("connected components") {
  SUBCASE("triangle is one component") {
    const auto labeling = connected_components(Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(labeling.component_count() == 1);
    CHECK(labeling.component_sizes == std::vector<std::size_t>{3});
  }
  SUBCASE("two disjoint edges") {
    const auto labeling = connected_components(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(labeling.component_count() == 2);
    CHECK(labeling.component_sizes == std::vector<std::size_t>{2, 2});
    CHECK(labeling.label[0] == labeling.label[1]);
    CHECK(labeling.label[2] == labeling.label[3]);
    CHECK(labeling.label[0] != labeling.label[2]);
  }
  SUBCASE("edgeless graph") {
    const auto labeling = connected_components(Graph::from_edges(5, {}));
    CHECK(labeling.component_count() == 5);
    CHECK(std::accumulate(labeling.component_sizes.begin(), labeling.component_sizes.end(),
                          std::size_t{0}) == 5);
  }
  SUBCASE("sizes sum to n; rerun is identical") {
    const Graph g = gen_er(70, 0.02, 4);
    const auto a = connected_components(g);
    const auto b = connected_components(g);
    CHECK(a.label == b.label);
    CHECK(a.component_sizes == b.component_sizes);
    CHECK(std::accumulate(a.component_sizes.begin(), a.component_sizes.end(), std::size_t{0}) ==
          g.node_count());
  }
}

TEST_CASE("largest connected component") {
  SUBCASE("triangle plus an edge keeps the triangle") {
    const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    const InducedSubgraph lcc = largest_connected_component(g);
    CHECK(lcc.graph.node_count() == 3);
    CHECK(lcc.graph.edge_count() == 3);
    CHECK(lcc.new_to_old == std::vector<NodeId>{0, 1, 2});
    CHECK(lcc.old_to_new[3] == kNoNode);
    CHECK(lcc.old_to_new[4] == kNoNode);
  }
  SUBCASE("already connected graph keeps its size") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const InducedSubgraph lcc = largest_connected_component(g);
    CHECK(lcc.graph.node_count() == 4);
    CHECK(lcc.graph == g);
  }
  SUBCASE("size ties go to the smallest original node id") {
    const Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}});
    const InducedSubgraph lcc = largest_connected_component(g);
    CHECK(lcc.new_to_old == std::vector<NodeId>{0, 1});
  }
  SUBCASE("output is connected") {
    const Graph g = gen_er(100, 0.012, 11);
    const InducedSubgraph lcc = largest_connected_component(g);
    CHECK(connected_components(lcc.graph).component_count() == 1);
  }
  SUBCASE("empty graph is rejected") {
    CHECK_THROWS_AS(largest_connected_component(Graph{}), std::invalid_argument);
  }
}
