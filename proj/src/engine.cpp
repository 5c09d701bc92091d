// SPDX-License-Identifier: Apache-2.0
#include "selfstab/engine.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "selfstab/errors.hpp"

namespace selfstab {

std::uint32_t exp_of(const Graph& g, const Configuration& c, NodeId v) {
  std::uint32_t k = 0;
  for (NodeId u : g.neighbors(v)) {
    if (c.in_set(u)) ++k;
  }
  return k;
}

bool exp_at_least(const Graph& g, const Configuration& c, NodeId v, std::uint32_t k) {
  if (k == 0) return true;
  std::uint32_t seen = 0;
  for (NodeId u : g.neighbors(v)) {
    if (c.in_set(u) && ++seen >= k) return true;
  }
  return false;
}

std::vector<RuleId> enabled_rules(const Graph& g, const Configuration& c, NodeId v,
                                  const RuleSet& rules) {
  if (c.size() != g.node_count()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  std::vector<RuleId> out;
  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    if (rules.rules[i].guard(g, c, v)) out.push_back({static_cast<int>(i), rules.rules[i].name});
  }
  return out;
}

int lowest_enabled_rule(const Graph& g, const Configuration& c, NodeId v, const RuleSet& rules) {
  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    if (rules.rules[i].guard(g, c, v)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<NodeId> enabled_set(const Graph& g, const Configuration& c, const RuleSet& rules) {
  if (c.size() != g.node_count()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (lowest_enabled_rule(g, c, v, rules) >= 0) out.push_back(v);
  }
  return out;
}

Configuration apply_move(const Graph& g, const Configuration& c, NodeId v, int rule_index,
                         const RuleSet& rules) {
  if (rule_index < 0 || static_cast<std::size_t>(rule_index) >= rules.rules.size()) {
    throw std::logic_error("rule index out of range: " + std::to_string(rule_index));
  }
  const Rule& rule = rules.rules[static_cast<std::size_t>(rule_index)];
  if (!rule.guard(g, c, v)) {
    throw std::logic_error("rule " + rule.name + " is not enabled at node " + std::to_string(v));
  }
  Configuration next = c;
  next.states[v] = rule.target;
  return next;
}

void ExecutionTrace::write_trace_csv(std::ostream& out) const {
  out << "step,node,rule,new_state,enabled_count_after\n";
  for (const MoveRecord& m : moves) {
    out << m.step << ',' << m.node << ',';
    if (static_cast<std::size_t>(m.rule_index) < rule_names.size()) {
      out << rule_names[static_cast<std::size_t>(m.rule_index)];
    } else {
      out << m.rule_index;
    }
    out << ',' << to_string(m.new_state) << ',' << m.enabled_count_after << '\n';
  }
}

std::string ExecutionTrace::trace_csv() const {
  std::ostringstream out;
  write_trace_csv(out);
  return out.str();
}

void ExecutionTrace::save_trace_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trace file: " + path);
  write_trace_csv(out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

Engine::Engine(const Graph& g, const RuleSet& rules, Configuration init, Options opt)
    : graph_(g), rules_(rules), config_(std::move(init)), opt_(opt) {
  if (config_.size() != g.node_count()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  if (rules_.rules.empty()) throw std::invalid_argument("rule set has no rules");
  const NodeId n = g.node_count();
  lowest_.assign(n, -1);
  fenwick_.assign(static_cast<std::size_t>(n) + 1, 0);
  stamp_.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    lowest_[v] = evaluate(v);
    if (lowest_[v] >= 0) {
      fenwick_add(v, +1);
      ++enabled_count_;
    }
  }
}

int Engine::evaluate(NodeId v) const {
  for (std::size_t i = 0; i < rules_.rules.size(); ++i) {
    if (rules_.rules[i].guard(graph_, config_, v)) return static_cast<int>(i);
  }
  return -1;
}

void Engine::fenwick_add(NodeId v, int delta) {
  const NodeId n = graph_.node_count();
  for (NodeId i = v + 1; i <= n; i += i & (~i + 1)) {
    fenwick_[i] = static_cast<std::uint32_t>(static_cast<int>(fenwick_[i]) + delta);
  }
}

NodeId Engine::enabled_nth(std::uint64_t rank) const {
  if (rank >= enabled_count_) throw std::out_of_range("enabled rank out of range");
  const NodeId n = graph_.node_count();
  std::uint64_t remaining = rank + 1;
  NodeId pos = 0;
  for (NodeId mask = std::bit_floor(n); mask != 0; mask >>= 1) {
    const NodeId next = pos + mask;
    if (next <= n && fenwick_[next] < remaining) {
      pos = next;
      remaining -= fenwick_[next];
    }
  }
  return pos;  // 1-based winner is pos + 1, so the node id is pos
}

std::vector<NodeId> Engine::enabled_sorted() const {
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(enabled_count_));
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    if (lowest_[v] >= 0) out.push_back(v);
  }
  return out;
}

EnabledAccess Engine::access() const {
  EnabledAccess a;
  a.count = enabled_count_;
  a.nth = [this](std::uint64_t rank) { return enabled_nth(rank); };
  a.lowest_rule = [this](NodeId v) { return lowest_[v]; };
  a.sorted_ids = [this] { return enabled_sorted(); };
  return a;
}

void Engine::reevaluate(NodeId v) {
  const int now = evaluate(v);
  const bool was = lowest_[v] >= 0;
  const bool is = now >= 0;
  if (was != is) {
    fenwick_add(v, is ? +1 : -1);
    if (is) {
      ++enabled_count_;
    } else {
      --enabled_count_;
    }
  }
  lowest_[v] = now;
}

void Engine::collect_dirty(std::span<const NodeId> seeds) {
  const NodeId n = graph_.node_count();
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0u);
    epoch_ = 1;
  }
  dirty_.clear();
  for (NodeId v : seeds) {
    if (stamp_[v] != epoch_) {
      stamp_[v] = epoch_;
      dirty_.push_back(v);
    }
  }
  std::size_t ring_begin = 0;
  for (int depth = 0; depth < rules_.dependency_radius && dirty_.size() < n; ++depth) {
    const std::size_t ring_end = dirty_.size();
    for (std::size_t i = ring_begin; i < ring_end && dirty_.size() < n; ++i) {
      for (NodeId w : graph_.neighbors(dirty_[i])) {
        if (stamp_[w] == epoch_) continue;
        stamp_[w] = epoch_;
        dirty_.push_back(w);
        if (dirty_.size() == n) break;
      }
    }
    ring_begin = ring_end;
  }
}

void Engine::validate_against_full_recompute() const {
  std::uint64_t count = 0;
  for (NodeId v = 0; v < graph_.node_count(); ++v) {
    const int fresh = evaluate(v);
    if (fresh != lowest_[v]) {
      throw std::logic_error("incremental enabled-set drift at node " + std::to_string(v));
    }
    if (fresh >= 0) ++count;
  }
  if (count != enabled_count_) throw std::logic_error("incremental enabled-count drift");
}

MoveRecord Engine::apply_at(NodeId v) {
  if (v >= graph_.node_count() || lowest_[v] < 0) {
    throw std::logic_error("apply_at on a disabled node " + std::to_string(v));
  }
  const int r = lowest_[v];
  MoveRecord rec;
  rec.step = moves_made_;
  rec.round = rounds_made_;
  rec.node = v;
  rec.rule_index = r;
  rec.new_state = rules_.rules[static_cast<std::size_t>(r)].target;

  config_.states[v] = rec.new_state;
  ++moves_made_;
  ++rounds_made_;

  collect_dirty({&v, 1});
  for (NodeId u : dirty_) reevaluate(u);
  rec.enabled_count_after = enabled_count_;
  if (opt_.validate_full_recompute) validate_against_full_recompute();
  return rec;
}

std::vector<MoveRecord> Engine::apply_round(const std::vector<NodeId>& selected) {
  if (selected.empty()) throw std::logic_error("apply_round needs a nonempty selection");
  std::vector<int> fired;
  fired.reserve(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const NodeId v = selected[i];
    if (i > 0 && v <= selected[i - 1]) {
      throw std::logic_error("apply_round selection must be strictly ascending");
    }
    if (v >= graph_.node_count() || lowest_[v] < 0) {
      throw std::logic_error("apply_round selected a disabled node " + std::to_string(v));
    }
    fired.push_back(lowest_[v]);
  }

  // All statements read the round-start configuration via `fired`; the writes
  // below land together, so the round is simultaneous.
  std::vector<MoveRecord> recs(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const NodeId v = selected[i];
    recs[i].step = moves_made_ + i;
    recs[i].round = rounds_made_;
    recs[i].node = v;
    recs[i].rule_index = fired[i];
    recs[i].new_state = rules_.rules[static_cast<std::size_t>(fired[i])].target;
    config_.states[v] = recs[i].new_state;
  }
  moves_made_ += selected.size();
  ++rounds_made_;

  collect_dirty(selected);
  for (NodeId u : dirty_) reevaluate(u);
  for (MoveRecord& rec : recs) rec.enabled_count_after = enabled_count_;
  if (opt_.validate_full_recompute) validate_against_full_recompute();
  return recs;
}

namespace {

EnabledAccess slow_access(const Graph& g, const Configuration& c, const RuleSet& rules,
                          const std::vector<NodeId>& enabled) {
  EnabledAccess a;
  a.count = enabled.size();
  a.nth = [&enabled](std::uint64_t rank) { return enabled.at(rank); };
  a.lowest_rule = [&g, &c, &rules](NodeId v) { return lowest_enabled_rule(g, c, v, rules); };
  a.sorted_ids = [&enabled] { return enabled; };
  return a;
}

}  // namespace

std::optional<std::pair<MoveRecord, Configuration>> step_central(const Graph& g,
                                                                 const Configuration& c,
                                                                 const RuleSet& rules,
                                                                 Daemon& daemon) {
  if (!daemon.spec().central()) throw std::logic_error("step_central needs a central daemon");
  const std::vector<NodeId> enabled = enabled_set(g, c, rules);
  if (enabled.empty()) return std::nullopt;

  const NodeId v = daemon.select_central(g, slow_access(g, c, rules, enabled));
  const int r = lowest_enabled_rule(g, c, v, rules);
  Configuration next = apply_move(g, c, v, r, rules);

  MoveRecord rec;
  rec.node = v;
  rec.rule_index = r;
  rec.new_state = rules.rules[static_cast<std::size_t>(r)].target;
  rec.enabled_count_after = enabled_set(g, next, rules).size();
  return std::make_pair(rec, std::move(next));
}

std::optional<std::pair<std::vector<MoveRecord>, Configuration>> step_subset(
    const Graph& g, const Configuration& c, const RuleSet& rules, Daemon& daemon) {
  if (daemon.spec().central()) throw std::logic_error("step_subset needs a subset daemon");
  const std::vector<NodeId> enabled = enabled_set(g, c, rules);
  if (enabled.empty()) return std::nullopt;

  const std::vector<NodeId> selected = daemon.select_subset(slow_access(g, c, rules, enabled));
  Configuration next = c;
  std::vector<MoveRecord> recs(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const NodeId v = selected[i];
    const int r = lowest_enabled_rule(g, c, v, rules);
    if (r < 0) throw std::logic_error("daemon selected a disabled node");
    recs[i].step = i;
    recs[i].node = v;
    recs[i].rule_index = r;
    recs[i].new_state = rules.rules[static_cast<std::size_t>(r)].target;
    next.states[v] = recs[i].new_state;
  }
  const std::uint64_t after = enabled_set(g, next, rules).size();
  for (MoveRecord& rec : recs) rec.enabled_count_after = after;
  return std::make_pair(std::move(recs), std::move(next));
}

std::uint64_t default_move_cap(const DaemonSpec& spec, NodeId n) {
  if (spec.central()) return 2ull * n + 1;
  return std::max<std::uint64_t>(10ull * n, 1);
}

ExecutionTrace run_to_fixpoint(const Graph& g, const RuleSet& rules, const DaemonSpec& daemon,
                               const Configuration& init, std::uint64_t move_cap,
                               Engine::Options opt) {
  if (move_cap < 1) throw std::invalid_argument("move_cap must be >= 1");

  Engine engine(g, rules, init, opt);
  Daemon d(daemon);
  ExecutionTrace trace;
  trace.seed = daemon.seed;
  trace.move_cap = move_cap;
  trace.rule_names = rules.rule_names();
  trace.moves.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(move_cap, 1u << 20)));

  if (daemon.central()) {
    while (engine.enabled_count() > 0 && trace.moves.size() < move_cap) {
      const NodeId v = d.select_central(g, engine.access());
      trace.moves.push_back(engine.apply_at(v));
    }
  } else {
    while (engine.enabled_count() > 0 && trace.moves.size() < move_cap) {
      std::vector<NodeId> selected = d.select_subset(engine.access());
      const std::uint64_t room = move_cap - trace.moves.size();
      if (selected.size() > room) selected.resize(static_cast<std::size_t>(room));
      for (MoveRecord& rec : engine.apply_round(selected)) trace.moves.push_back(rec);
    }
  }

  trace.rounds = engine.rounds_made();
  trace.converged = engine.enabled_count() == 0;
  trace.final_config = engine.config();
  return trace;
}

}  // namespace selfstab
