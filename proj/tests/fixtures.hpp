// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "selfstab/graph.hpp"
#include "selfstab/state.hpp"

namespace fixtures {

using selfstab::Graph;
using selfstab::NodeId;

inline Graph path_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph::from_edges(n, edges);
}

// Center is node 0.
inline Graph star_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u + 1 < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

inline Graph edgeless_graph(NodeId n) { return Graph::from_edges(n, {}); }

// 1 = In, 0 = Out, in node order.
inline selfstab::Configuration config_of(std::initializer_list<int> bits) {
  selfstab::Configuration c;
  for (int b : bits) {
    c.states.push_back(b ? selfstab::NodeState::In : selfstab::NodeState::Out);
  }
  return c;
}

}  // namespace fixtures
