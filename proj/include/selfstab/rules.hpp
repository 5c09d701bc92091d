// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "selfstab/graph.hpp"
#include "selfstab/state.hpp"

namespace selfstab {

// Names one rule of an algorithm; index is its priority position.
struct RuleId {
  int index = 0;
  std::string name;

  bool operator==(const RuleId&) const = default;
};

// One guarded command. Guards must be pure predicates over
// (graph, configuration, node); the statement writes only the evaluated
// node's own state.
struct Rule {
  std::string name;
  std::function<bool(const Graph&, const Configuration&, NodeId)> guard;
  NodeState target = NodeState::In;
};

// An algorithm: ordered rules (lower index fires first when several guards
// hold) plus the radius of the neighborhood the guards read. A move at v can
// only flip guard values of nodes within dependency_radius of v; incremental
// enabled-set maintenance relies on exactly that.
struct RuleSet {
  std::string algorithm;  // CLI token
  std::vector<Rule> rules;
  int dependency_radius = 2;  // 1 or 2

  std::vector<std::string> rule_names() const {
    std::vector<std::string> names;
    names.reserve(rules.size());
    for (const Rule& r : rules) names.push_back(r.name);
    return names;
  }
};

}  // namespace selfstab
