// SPDX-License-Identifier: Apache-2.0
#include "selfstab/daemon.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "selfstab/errors.hpp"
#include "selfstab/rng.hpp"

namespace selfstab {

namespace {

bool known_strategy(const std::string& s) {
  return s == "max-degree-first" || s == "min-id-first" || s == "delay-r1";
}

}  // namespace

DaemonSpec DaemonSpec::parse(const std::string& token, std::uint64_t seed) {
  DaemonSpec spec;
  spec.seed = seed;
  if (token == "central-random") {
    spec.kind = Kind::CentralRandom;
    return spec;
  }
  if (token == "synchronous") {
    spec.kind = Kind::Synchronous;
    return spec;
  }
  if (token.rfind("central-adversarial:", 0) == 0) {
    spec.kind = Kind::CentralAdversarial;
    spec.strategy = token.substr(20);
    if (!known_strategy(spec.strategy)) {
      throw ParseError("unknown adversarial strategy: " + spec.strategy);
    }
    return spec;
  }
  if (token.rfind("distributed:", 0) == 0) {
    spec.kind = Kind::Distributed;
    const std::string arg = token.substr(12);
    char* end = nullptr;
    const double q = std::strtod(arg.c_str(), &end);
    if (arg.empty() || end != arg.c_str() + arg.size() || !(q > 0.0 && q <= 1.0)) {
      throw ParseError("distributed selection probability must lie in (0, 1]: " + token);
    }
    spec.selection_probability = q;
    return spec;
  }
  throw ParseError("unknown daemon: " + token +
                   " (expected central-random|central-adversarial:NAME|distributed:Q|synchronous)");
}

std::string DaemonSpec::token() const {
  switch (kind) {
    case Kind::CentralRandom:
      return "central-random";
    case Kind::CentralAdversarial:
      return "central-adversarial:" + strategy;
    case Kind::Distributed: {
      char buf[32];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, selection_probability);
      return "distributed:" + std::string(buf, ptr);
    }
    case Kind::Synchronous:
      return "synchronous";
  }
  return "central-random";
}

NodeId Daemon::select_central(const Graph& g, const EnabledAccess& access) {
  if (access.count == 0) throw std::logic_error("daemon asked to select from an empty set");
  if (spec_.kind == DaemonSpec::Kind::CentralRandom) {
    return access.nth(bounded(rng_, access.count));
  }
  if (spec_.kind != DaemonSpec::Kind::CentralAdversarial) {
    throw std::logic_error("select_central called on a subset daemon");
  }

  if (spec_.strategy == "min-id-first") return access.nth(0);

  const std::vector<NodeId> ids = access.sorted_ids();
  if (spec_.strategy == "max-degree-first") {
    NodeId best = ids.front();
    std::uint32_t best_deg = g.degree(best);
    for (NodeId v : ids) {
      if (g.degree(v) > best_deg) {
        best = v;
        best_deg = g.degree(v);
      }
    }
    return best;
  }
  // delay-r1: prefer nodes whose lowest enabled rule is the second rule
  // (index 1); smallest id wins either way.
  for (NodeId v : ids) {
    if (access.lowest_rule(v) == 1) return v;
  }
  return ids.front();
}

std::vector<NodeId> Daemon::select_subset(const EnabledAccess& access) {
  if (access.count == 0) throw std::logic_error("daemon asked to select from an empty set");
  std::vector<NodeId> ids = access.sorted_ids();
  if (spec_.kind == DaemonSpec::Kind::Synchronous) return ids;
  if (spec_.kind != DaemonSpec::Kind::Distributed) {
    throw std::logic_error("select_subset called on a central daemon");
  }
  std::vector<NodeId> pick;
  do {
    pick.clear();
    for (NodeId v : ids) {
      if (unit_double(rng_) < spec_.selection_probability) pick.push_back(v);
    }
  } while (pick.empty());
  return pick;
}

}  // namespace selfstab
