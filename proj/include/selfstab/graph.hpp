// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace selfstab {

// Node ids are dense and zero-based: every id in [0, n) names exactly one node.
using NodeId = std::uint32_t;

struct GraphGenSpec {
  NodeId n = 0;
  double density = 0.0;  // independent edge probability in [0, 1]
  std::uint64_t seed = 0;
};

// Immutable undirected simple graph. Adjacency lists are sorted ascending so
// iteration order is identical everywhere; storage is CSR.
class Graph {
 public:
  // Builds from unordered edge pairs. Rejects out-of-range ids, self-loops
  // and duplicate edges.
  static Graph from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);

  NodeId node_count() const noexcept { return n_; }
  std::uint64_t edge_count() const noexcept { return m_; }

  std::uint32_t degree(NodeId v) const;
  std::span<const NodeId> neighbors(NodeId v) const;

  // Nodes at distance 1 or 2 from v, sorted ascending. v itself is excluded.
  std::vector<NodeId> dist2_neighborhood(NodeId v) const;

  // True iff b is unreachable from a within two hops. Requires a != b.
  bool pairwise_distance_gt2(NodeId a, NodeId b) const;

  bool has_edge(NodeId u, NodeId v) const;

  bool operator==(const Graph&) const = default;

 private:
  Graph() = default;

  void check_node(NodeId v) const;

  NodeId n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_;  // size n_ + 1
  std::vector<NodeId> adj_;
};

// G(n, p): each unordered pair {u, v} becomes an edge independently with
// probability spec.density. A pure function of its arguments.
Graph gen_random_graph(const GraphGenSpec& spec);

// Edge-list text format: first line "n m", then m lines "u v" with u < v,
// one undirected edge per line. Unknown ids, self-loops, duplicates, or an
// edge count mismatch are parse errors.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph load_edge_list(const std::string& path);
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace selfstab
