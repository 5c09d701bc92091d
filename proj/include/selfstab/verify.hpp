// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfstab/graph.hpp"

namespace selfstab {

// Outcome of one property check. A failed check always carries a witness
// that can be re-checked against the graph by hand.
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<std::pair<NodeId, NodeId>> witness_pair;
  std::optional<NodeId> witness_node;

  // "(a,b)" or "v"; empty when the property holds.
  std::string witness_text() const;
};

// Every distinct pair of S lies at distance > 2. Witness: the first
// offending pair in lexicographic order.
PropertyReport is_d2_independent(const Graph& g, const std::vector<NodeId>& s);

// is_d2_independent plus: every node outside S has some member of S within
// distance 2. Witness: the offending pair, or the smallest uncovered node.
PropertyReport is_maximal_d2is(const Graph& g, const std::vector<NodeId>& s);

// No edge inside S and every node outside S has a neighbor in S.
PropertyReport is_maximal_independent(const Graph& g, const std::vector<NodeId>& s);

// Brute-force oracle: all maximal distance-2 independent sets of g, each set
// ascending, the list in lexicographic order. Rejects n > 20.
std::vector<std::vector<NodeId>> enumerate_all_maximal_d2is(const Graph& g);

}  // namespace selfstab
