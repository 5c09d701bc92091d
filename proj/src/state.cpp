// SPDX-License-Identifier: Apache-2.0
#include "selfstab/state.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "selfstab/errors.hpp"
#include "selfstab/rng.hpp"

namespace selfstab {

const char* to_string(NodeState s) { return s == NodeState::In ? "In" : "Out"; }

std::uint64_t Configuration::cardinality() const {
  std::uint64_t k = 0;
  for (NodeState s : states) {
    if (s == NodeState::In) ++k;
  }
  return k;
}

std::vector<NodeId> Configuration::in_set_members() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < size(); ++v) {
    if (in_set(v)) out.push_back(v);
  }
  return out;
}

InitSpec InitSpec::parse(const std::string& token) {
  if (token == "all-out") return {Kind::AllOut, 0.0};
  if (token == "all-in") return {Kind::AllIn, 0.0};
  if (token.rfind("random:", 0) == 0) {
    const std::string arg = token.substr(7);
    char* end = nullptr;
    const double p = std::strtod(arg.c_str(), &end);
    if (arg.empty() || end != arg.c_str() + arg.size() || !(p >= 0.0 && p <= 1.0)) {
      throw ParseError("bad init probability: " + token);
    }
    return {Kind::Random, p};
  }
  throw ParseError("unknown init spec: " + token + " (expected all-out|all-in|random:P)");
}

std::string InitSpec::token() const {
  switch (kind) {
    case Kind::AllOut:
      return "all-out";
    case Kind::AllIn:
      return "all-in";
    case Kind::Random: {
      char buf[32];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
      return "random:" + std::string(buf, ptr);
    }
  }
  return "all-out";
}

Configuration make_initial(NodeId n, const InitSpec& init, std::uint64_t seed) {
  Configuration c;
  c.states.assign(n, NodeState::Out);
  switch (init.kind) {
    case InitSpec::Kind::AllOut:
      break;
    case InitSpec::Kind::AllIn:
      c.states.assign(n, NodeState::In);
      break;
    case InitSpec::Kind::Random: {
      std::mt19937_64 rng(seed);
      for (NodeId v = 0; v < n; ++v) {
        if (unit_double(rng) < init.p) c.states[v] = NodeState::In;
      }
      break;
    }
  }
  return c;
}

Configuration read_state_file(std::istream& in, NodeId n) {
  Configuration c;
  c.states.assign(n, NodeState::Out);
  std::vector<std::uint8_t> seen(n, 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long long id = -1;
    std::string word;
    if (!(row >> id >> word) || !(row >> std::ws).eof()) {
      throw ParseError("state file line " + std::to_string(lineno) + ": expected \"<id> In|Out\"");
    }
    if (id < 0 || id >= static_cast<long long>(n)) {
      throw ParseError("state file line " + std::to_string(lineno) + ": node id out of range");
    }
    if (seen[static_cast<NodeId>(id)]) {
      throw ParseError("state file line " + std::to_string(lineno) + ": duplicate node id");
    }
    seen[static_cast<NodeId>(id)] = 1;
    if (word == "In") {
      c.states[static_cast<NodeId>(id)] = NodeState::In;
    } else if (word == "Out") {
      c.states[static_cast<NodeId>(id)] = NodeState::Out;
    } else {
      throw ParseError("state file line " + std::to_string(lineno) + ": bad state \"" + word +
                       "\"");
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (!seen[v]) throw ParseError("state file: missing node " + std::to_string(v));
  }
  return c;
}

void write_state_file(const Configuration& c, std::ostream& out) {
  for (NodeId v = 0; v < c.size(); ++v) out << v << ' ' << to_string(c.states[v]) << '\n';
}

Configuration load_state_file(const std::string& path, NodeId n) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file: " + path);
  return read_state_file(in, n);
}

void save_state_file(const Configuration& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write state file: " + path);
  write_state_file(c, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace selfstab
