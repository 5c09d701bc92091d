// SPDX-License-Identifier: Apache-2.0
#include "selfstab/algorithms.hpp"

#include "selfstab/engine.hpp"
#include "selfstab/errors.hpp"

namespace selfstab {

namespace {

bool out_with_no_in_neighbor(const Graph& g, const Configuration& c, NodeId v) {
  return !c.in_set(v) && !exp_at_least(g, c, v, 1);
}

}  // namespace

AlgorithmId parse_algorithm(const std::string& token) {
  if (token == "md2is") return AlgorithmId::Md2is;
  if (token == "mis") return AlgorithmId::MisCentral;
  if (token == "mis-id") return AlgorithmId::MisIdBased;
  throw ParseError("unknown algorithm: " + token + " (expected md2is|mis|mis-id)");
}

std::string algorithm_token(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::Md2is:
      return "md2is";
    case AlgorithmId::MisCentral:
      return "mis";
    case AlgorithmId::MisIdBased:
      return "mis-id";
  }
  return "md2is";
}

RuleSet rules_for(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::Md2is:
      return md2is_rules();
    case AlgorithmId::MisCentral:
      return mis_central_rules();
    case AlgorithmId::MisIdBased:
      return mis_idbased_rules();
  }
  return md2is_rules();
}

RuleSet md2is_rules() {
  RuleSet rs;
  rs.algorithm = "md2is";
  rs.dependency_radius = 2;
  rs.rules.push_back(Rule{
      "R1",
      [](const Graph& g, const Configuration& c, NodeId v) {
        if (c.in_set(v)) return false;
        for (NodeId u : g.neighbors(v)) {
          // u.state=Out and exp(u)=0, i.e. nothing of S within distance 2 of
          // v through u.
          if (c.in_set(u) || exp_at_least(g, c, u, 1)) return false;
        }
        return true;
      },
      NodeState::In,
  });
  rs.rules.push_back(Rule{
      "R2",
      [](const Graph& g, const Configuration& c, NodeId v) {
        if (!c.in_set(v)) return false;
        for (NodeId u : g.neighbors(v)) {
          // u.exp=1 means u is dominated only by v, which is no conflict;
          // only u.state=In or u.exp>1 forces v out.
          if (c.in_set(u) || exp_at_least(g, c, u, 2)) return true;
        }
        return false;
      },
      NodeState::Out,
  });
  return rs;
}

RuleSet mis_central_rules() {
  RuleSet rs;
  rs.algorithm = "mis";
  rs.dependency_radius = 1;
  rs.rules.push_back(Rule{
      "R1",
      [](const Graph& g, const Configuration& c, NodeId v) {
        return out_with_no_in_neighbor(g, c, v);
      },
      NodeState::In,
  });
  rs.rules.push_back(Rule{
      "R2",
      [](const Graph& g, const Configuration& c, NodeId v) {
        return c.in_set(v) && exp_at_least(g, c, v, 1);
      },
      NodeState::Out,
  });
  return rs;
}

RuleSet mis_idbased_rules() {
  RuleSet rs;
  rs.algorithm = "mis-id";
  rs.dependency_radius = 2;
  rs.rules.push_back(Rule{
      "R1",
      [](const Graph& g, const Configuration& c, NodeId v) {
        if (!out_with_no_in_neighbor(g, c, v)) return false;
        for (NodeId w : g.neighbors(v)) {
          if (w >= v) break;  // neighbors are ascending; only smaller ids can block
          if (out_with_no_in_neighbor(g, c, w)) return false;
        }
        return true;
      },
      NodeState::In,
  });
  rs.rules.push_back(Rule{
      "R2",
      [](const Graph& g, const Configuration& c, NodeId v) {
        if (!c.in_set(v)) return false;
        for (NodeId u : g.neighbors(v)) {
          if (u >= v) break;
          if (c.in_set(u)) return true;
        }
        return false;
      },
      NodeState::Out,
  });
  return rs;
}

}  // namespace selfstab
