#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netcolor {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

using Edge = std::pair<NodeId, NodeId>;

// Immutable simple undirected graph in CSR form. Neighbor lists are sorted,
// so iteration order is reproducible across runs and platforms. Safe to
// share between threads once constructed.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate pairs, in either
  // orientation, collapse to a single edge. Throws std::out_of_range for an
  // endpoint >= n and std::invalid_argument for a self-loop.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::size_t degree(NodeId u) const;
  std::span<const NodeId> neighbors(NodeId u) const;
  std::size_t max_degree() const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_node(NodeId u) const;

  std::vector<std::size_t> offsets_;  // n + 1 entries once built
  std::vector<NodeId> adjacency_;
  std::size_t edge_count_ = 0;
};

struct ComponentLabeling {
  std::vector<std::uint32_t> label;         // per-node component id
  std::vector<std::size_t> component_sizes;  // indexed by component id

  std::size_t component_count() const { return component_sizes.size(); }
};

// BFS labeling seeded in increasing node order, so component ids are ordered
// by their smallest member. Deterministic.
ComponentLabeling connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> old_to_new;  // kNoNode for nodes outside the subgraph
  std::vector<NodeId> new_to_old;
};

// Induced subgraph on the largest connected component, nodes relabeled
// densely in original id order. Ties between equal-size components go to the
// one with the smallest original node id. Throws std::invalid_argument on an
// empty graph.
InducedSubgraph largest_connected_component(const Graph& g);

}  // namespace netcolor
