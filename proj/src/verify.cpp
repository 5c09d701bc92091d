// SPDX-License-Identifier: Apache-2.0
#include "selfstab/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace selfstab {

namespace {

// Sorted, deduplicated, validated copy of the member list.
std::vector<NodeId> as_set(const Graph& g, const std::vector<NodeId>& s) {
  std::vector<NodeId> set = s;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!set.empty() && set.back() >= g.node_count()) {
    throw std::out_of_range("set member " + std::to_string(set.back()) + " out of range");
  }
  return set;
}

bool within_dist2_of_set(const Graph& g, NodeId v, const std::vector<NodeId>& set) {
  for (NodeId u : set) {
    if (u == v || !g.pairwise_distance_gt2(v, u)) return true;
  }
  return false;
}

}  // namespace

std::string PropertyReport::witness_text() const {
  if (witness_pair) {
    return "(" + std::to_string(witness_pair->first) + "," +
           std::to_string(witness_pair->second) + ")";
  }
  if (witness_node) return std::to_string(*witness_node);
  return "";
}

PropertyReport is_d2_independent(const Graph& g, const std::vector<NodeId>& s) {
  PropertyReport report;
  report.property = "d2-independent";
  const std::vector<NodeId> set = as_set(g, s);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (!g.pairwise_distance_gt2(set[i], set[j])) {
        report.holds = false;
        report.witness_pair = {set[i], set[j]};
        return report;
      }
    }
  }
  return report;
}

PropertyReport is_maximal_d2is(const Graph& g, const std::vector<NodeId>& s) {
  PropertyReport report = is_d2_independent(g, s);
  report.property = "maximal-d2is";
  if (!report.holds) return report;
  const std::vector<NodeId> set = as_set(g, s);
  std::vector<std::uint8_t> member(g.node_count(), 0);
  for (NodeId u : set) member[u] = 1;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (member[v]) continue;
    if (!within_dist2_of_set(g, v, set)) {
      report.holds = false;
      report.witness_node = v;
      return report;
    }
  }
  return report;
}

PropertyReport is_maximal_independent(const Graph& g, const std::vector<NodeId>& s) {
  PropertyReport report;
  report.property = "maximal-independent-set";
  const std::vector<NodeId> set = as_set(g, s);
  std::vector<std::uint8_t> member(g.node_count(), 0);
  for (NodeId u : set) member[u] = 1;
  for (NodeId u : set) {
    for (NodeId w : g.neighbors(u)) {
      if (w > u && member[w]) {
        report.holds = false;
        report.witness_pair = {u, w};
        return report;
      }
    }
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (member[v]) continue;
    bool covered = false;
    for (NodeId w : g.neighbors(v)) {
      if (member[w]) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      report.holds = false;
      report.witness_node = v;
      return report;
    }
  }
  return report;
}

namespace {

struct OracleState {
  const Graph* g = nullptr;
  NodeId n = 0;
  std::vector<std::uint32_t> closed;  // v plus everything within distance 2
  std::vector<std::vector<NodeId>> found;

  void recurse(NodeId v, std::uint32_t chosen, std::uint32_t blocked) {
    if (v == n) {
      for (NodeId w = 0; w < n; ++w) {
        if (!((chosen >> w) & 1u) && (closed[w] & chosen) == 0) return;  // w uncovered
      }
      std::vector<NodeId> members;
      for (NodeId w = 0; w < n; ++w) {
        if ((chosen >> w) & 1u) members.push_back(w);
      }
      found.push_back(std::move(members));
      return;
    }
    if (!((blocked >> v) & 1u)) recurse(v + 1, chosen | (1u << v), blocked | closed[v]);
    recurse(v + 1, chosen, blocked);
  }
};

}  // namespace

std::vector<std::vector<NodeId>> enumerate_all_maximal_d2is(const Graph& g) {
  if (g.node_count() > 20) {
    throw std::invalid_argument("enumeration oracle limited to n <= 20, got " +
                                std::to_string(g.node_count()));
  }
  OracleState st;
  st.g = &g;
  st.n = g.node_count();
  st.closed.assign(st.n, 0);
  for (NodeId v = 0; v < st.n; ++v) {
    std::uint32_t mask = 1u << v;
    for (NodeId u : g.dist2_neighborhood(v)) mask |= 1u << u;
    st.closed[v] = mask;
  }
  st.recurse(0, 0, 0);
  std::sort(st.found.begin(), st.found.end());
  return st.found;
}

}  // namespace selfstab
