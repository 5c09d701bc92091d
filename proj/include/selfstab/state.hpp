// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "selfstab/graph.hpp"

namespace selfstab {

enum class NodeState : std::uint8_t { Out = 0, In = 1 };

const char* to_string(NodeState s);

// One binary state per node. The set under construction is always
// S = { v : states[v] == In }; nothing else is stored per node.
struct Configuration {
  std::vector<NodeState> states;

  NodeId size() const { return static_cast<NodeId>(states.size()); }
  bool in_set(NodeId v) const { return states[v] == NodeState::In; }

  std::uint64_t cardinality() const;
  std::vector<NodeId> in_set_members() const;  // sorted ascending

  bool operator==(const Configuration&) const = default;
};

// Initial-configuration presets: all-out | all-in | random:P.
struct InitSpec {
  enum class Kind { AllOut, AllIn, Random };
  Kind kind = Kind::Random;
  double p = 0.5;  // Random only

  static InitSpec parse(const std::string& token);
  std::string token() const;
};

// Random draws happen in ascending node order, so the result is a pure
// function of (graph size, spec, seed).
Configuration make_initial(NodeId n, const InitSpec& init, std::uint64_t seed);

// State file: one line per node, "<id> In|Out". Every id in [0, n) must
// appear exactly once; order is free on input, ascending on output.
Configuration read_state_file(std::istream& in, NodeId n);
void write_state_file(const Configuration& c, std::ostream& out);
Configuration load_state_file(const std::string& path, NodeId n);
void save_state_file(const Configuration& c, const std::string& path);

}  // namespace selfstab
