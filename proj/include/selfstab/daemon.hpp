// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "selfstab/graph.hpp"

namespace selfstab {

// Scheduler description. Central kinds activate exactly one enabled node per
// step; Distributed/Synchronous activate a nonempty subset per round.
struct DaemonSpec {
  enum class Kind { CentralRandom, CentralAdversarial, Distributed, Synchronous };

  Kind kind = Kind::CentralRandom;
  std::string strategy;                // CentralAdversarial only
  double selection_probability = 0.5;  // Distributed only, in (0, 1]
  std::uint64_t seed = 0;

  bool central() const {
    return kind == Kind::CentralRandom || kind == Kind::CentralAdversarial;
  }

  // Tokens: central-random | central-adversarial:NAME | distributed:Q | synchronous.
  // Strategies: max-degree-first | min-id-first | delay-r1.
  static DaemonSpec parse(const std::string& token, std::uint64_t seed);
  std::string token() const;  // canonical form, seed not included
};

// How daemons see the enabled set. `nth` indexes enabled nodes in ascending
// id order, so a selection is the same whether the caller maintains the set
// incrementally or recomputes it from scratch.
struct EnabledAccess {
  std::uint64_t count = 0;
  std::function<NodeId(std::uint64_t)> nth;
  std::function<int(NodeId)> lowest_rule;            // -1 when disabled
  std::function<std::vector<NodeId>()> sorted_ids;   // ascending
};

// Runtime selection state: a DaemonSpec plus its seeded generator.
class Daemon {
 public:
  explicit Daemon(const DaemonSpec& spec) : spec_(spec), rng_(spec.seed) {}

  const DaemonSpec& spec() const { return spec_; }

  // Central kinds. Requires access.count >= 1.
  NodeId select_central(const Graph& g, const EnabledAccess& access);

  // Subset kinds. Requires access.count >= 1; the result is nonempty and
  // ascending. Distributed includes each enabled node independently with the
  // selection probability and redraws whole passes until nonempty.
  std::vector<NodeId> select_subset(const EnabledAccess& access);

 private:
  DaemonSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace selfstab
