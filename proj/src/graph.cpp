#include "netcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netcolor {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw std::out_of_range("edge endpoint (" + std::to_string(a) + ", " + std::to_string(b) +
                              ") out of range for n=" + std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("self-loop at node " + std::to_string(a));
    norm.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : norm) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * norm.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Pairs are normalized (u < v) and lexicographically sorted, so each
  // node's slots fill in ascending neighbor order without a per-node sort.
  for (const auto& [u, v] : norm) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  g.edge_count_ = norm.size();
  return g;
}

void Graph::check_node(NodeId u) const {
  if (u >= node_count()) {
    throw std::out_of_range("node " + std::to_string(u) + " out of range for n=" +
                            std::to_string(node_count()));
  }
}

std::size_t Graph::degree(NodeId u) const {
  check_node(u);
  return offsets_[u + 1] - offsets_[u];
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t u = 0; u + 1 < offsets_.size(); ++u) {
    best = std::max(best, offsets_[u + 1] - offsets_[u]);
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  const auto n = node_count();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

ComponentLabeling connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  ComponentLabeling out;
  out.label.assign(n, static_cast<std::uint32_t>(-1));
  std::vector<NodeId> queue;
  for (NodeId start = 0; start < n; ++start) {
    if (out.label[start] != static_cast<std::uint32_t>(-1)) continue;
    const auto comp = static_cast<std::uint32_t>(out.component_sizes.size());
    std::size_t size = 0;
    queue.clear();
    queue.push_back(start);
    out.label[start] = comp;
    while (!queue.empty()) {
      NodeId u = queue.back();
      queue.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (out.label[v] == static_cast<std::uint32_t>(-1)) {
          out.label[v] = comp;
          queue.push_back(v);
        }
      }
    }
    out.component_sizes.push_back(size);
  }
  return out;
}

InducedSubgraph largest_connected_component(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("largest_connected_component: empty graph");
  const ComponentLabeling labeling = connected_components(g);
  // Component ids are ordered by smallest member, so the first maximum also
  // breaks size ties toward the smallest original node id.
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < labeling.component_count(); ++c) {
    if (labeling.component_sizes[c] > labeling.component_sizes[best]) best = c;
  }

  InducedSubgraph out;
  out.old_to_new.assign(n, kNoNode);
  for (NodeId u = 0; u < n; ++u) {
    if (labeling.label[u] == best) {
      out.old_to_new[u] = static_cast<NodeId>(out.new_to_old.size());
      out.new_to_old.push_back(u);
    }
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    if (out.old_to_new[u] == kNoNode) continue;
    for (NodeId v : g.neighbors(u)) {
      if (v > u) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    }
  }
  out.graph = Graph::from_edges(out.new_to_old.size(), edges);
  return out;
}

}  // namespace netcolor
