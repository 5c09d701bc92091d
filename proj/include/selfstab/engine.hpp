// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "selfstab/daemon.hpp"
#include "selfstab/graph.hpp"
#include "selfstab/rules.hpp"
#include "selfstab/state.hpp"

namespace selfstab {

// exp(v): the number of v's neighbors currently in the set. Recomputed from
// the configuration on every call; it is never stored, so it can never go
// stale across moves.
std::uint32_t exp_of(const Graph& g, const Configuration& c, NodeId v);

// exp_of(v) >= k, with early exit. Guards use this so that dense graphs do
// not pay a full neighborhood scan per probe.
bool exp_at_least(const Graph& g, const Configuration& c, NodeId v, std::uint32_t k);

// Ids of all rules whose guard holds for v. Empty means v is disabled.
std::vector<RuleId> enabled_rules(const Graph& g, const Configuration& c, NodeId v,
                                  const RuleSet& rules);

// Exactly the nodes with at least one enabled rule, ascending.
std::vector<NodeId> enabled_set(const Graph& g, const Configuration& c, const RuleSet& rules);

// Lowest enabled rule index for v, or -1.
int lowest_enabled_rule(const Graph& g, const Configuration& c, NodeId v, const RuleSet& rules);

// Applies one rule's statement to v. The rule must be enabled; applying a
// disabled rule is rejected so daemon bugs surface immediately.
Configuration apply_move(const Graph& g, const Configuration& c, NodeId v, int rule_index,
                         const RuleSet& rules);

// One executed statement.
struct MoveRecord {
  std::uint64_t step = 0;   // global move index, strictly increasing from 0
  std::uint64_t round = 0;  // owning round (== step under central daemons)
  NodeId node = 0;
  int rule_index = 0;
  NodeState new_state = NodeState::Out;
  // Enabled-node count once the step landed; for moves inside a subset round
  // this is the count after the whole round.
  std::uint64_t enabled_count_after = 0;

  bool operator==(const MoveRecord&) const = default;
};

struct ExecutionTrace {
  std::vector<MoveRecord> moves;
  std::uint64_t rounds = 0;
  bool converged = false;
  Configuration final_config;
  std::uint64_t seed = 0;  // daemon seed
  std::uint64_t move_cap = 0;
  std::vector<std::string> rule_names;

  std::uint64_t cardinality() const { return final_config.cardinality(); }

  // Trace CSV: step,node,rule,new_state,enabled_count_after.
  void write_trace_csv(std::ostream& out) const;
  std::string trace_csv() const;
  void save_trace_csv(const std::string& path) const;
};

// Incremental fixpoint engine. Tracks each node's lowest enabled rule plus a
// Fenwick tree over the enabled flags, so daemons can select by rank in
// ascending id order in O(log n). After a move at v only nodes within the
// rule set's dependency radius of v are re-evaluated.
class Engine {
 public:
  struct Options {
    // Recompute the enabled set from scratch after every step and compare
    // with the incremental bookkeeping. Slow; for tests.
    bool validate_full_recompute = false;
  };

  // The graph must outlive the engine; the rule set is copied.
  Engine(const Graph& g, const RuleSet& rules, Configuration init)
      : Engine(g, rules, std::move(init), Options{}) {}
  Engine(const Graph& g, const RuleSet& rules, Configuration init, Options opt);
  Engine(Graph&&, const RuleSet&, Configuration) = delete;
  Engine(Graph&&, const RuleSet&, Configuration, Options) = delete;

  const Configuration& config() const { return config_; }
  std::uint64_t enabled_count() const { return enabled_count_; }
  int lowest_rule(NodeId v) const { return lowest_[v]; }
  NodeId enabled_nth(std::uint64_t rank) const;  // ascending-id rank
  std::vector<NodeId> enabled_sorted() const;
  EnabledAccess access() const;
  std::uint64_t moves_made() const { return moves_made_; }
  std::uint64_t rounds_made() const { return rounds_made_; }

  // Applies v's lowest enabled rule. v must be enabled.
  MoveRecord apply_at(NodeId v);

  // Applies every selected node's lowest enabled rule simultaneously: guards
  // and statements all come from the round-start configuration. `selected`
  // must be nonempty, ascending, and all enabled.
  std::vector<MoveRecord> apply_round(const std::vector<NodeId>& selected);

 private:
  int evaluate(NodeId v) const;
  void reevaluate(NodeId v);
  // Fills dirty_ with the seeds plus everything within dependency_radius of
  // them, deduplicated; stops growing once every node is dirty.
  void collect_dirty(std::span<const NodeId> seeds);
  void validate_against_full_recompute() const;

  const Graph& graph_;
  RuleSet rules_;
  Configuration config_;
  Options opt_;

  std::vector<int> lowest_;          // -1 = disabled
  std::vector<std::uint32_t> fenwick_;
  std::uint64_t enabled_count_ = 0;
  std::uint64_t moves_made_ = 0;
  std::uint64_t rounds_made_ = 0;

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> dirty_;

  void fenwick_add(NodeId v, int delta);
};

// Single steps against a raw configuration (the non-incremental path; tests
// cross-check it against Engine move for move). Returns nothing once every
// node is disabled. step/round counters in the records start at 0.
std::optional<std::pair<MoveRecord, Configuration>> step_central(const Graph& g,
                                                                 const Configuration& c,
                                                                 const RuleSet& rules,
                                                                 Daemon& daemon);

std::optional<std::pair<std::vector<MoveRecord>, Configuration>> step_subset(
    const Graph& g, const Configuration& c, const RuleSet& rules, Daemon& daemon);

// 2n+1 for central daemons, 10n for subset daemons.
std::uint64_t default_move_cap(const DaemonSpec& spec, NodeId n);

// Runs until no node is enabled (converged) or move_cap moves executed.
// Fully deterministic given (graph, rules, daemon spec incl. seed, init, cap).
// move_cap must be >= 1. A subset round that would overshoot the cap is
// truncated to the first cap-minus-moves selected nodes.
ExecutionTrace run_to_fixpoint(const Graph& g, const RuleSet& rules, const DaemonSpec& daemon,
                               const Configuration& init, std::uint64_t move_cap,
                               Engine::Options opt = {});

}  // namespace selfstab
