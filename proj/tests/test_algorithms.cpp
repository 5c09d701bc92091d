// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "selfstab/algorithms.hpp"
#include "selfstab/daemon.hpp"
#include "selfstab/engine.hpp"
#include "selfstab/errors.hpp"
#include "selfstab/verify.hpp"

using namespace selfstab;
using namespace fixtures;

namespace {

Configuration config_from_mask(NodeId n, std::uint32_t mask) {
  Configuration c{std::vector<NodeState>(n, NodeState::Out)};
  for (NodeId v = 0; v < n; ++v) {
    if (mask & (1u << v)) c.states[v] = NodeState::In;
  }
  return c;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> gs;
  gs.push_back(path_graph(5));
  gs.push_back(cycle_graph(5));
  gs.push_back(complete_graph(4));
  gs.push_back(star_graph(6));
  gs.push_back(edgeless_graph(3));
  gs.push_back(gen_random_graph({8, 0.3, 42}));
  gs.push_back(gen_random_graph({8, 0.6, 43}));
  return gs;
}

}  // namespace

TEST_CASE("algorithm tokens round-trip") {
  CHECK(parse_algorithm("md2is") == AlgorithmId::Md2is);
  CHECK(parse_algorithm("mis") == AlgorithmId::MisCentral);
  CHECK(parse_algorithm("mis-id") == AlgorithmId::MisIdBased);
  for (AlgorithmId id : {AlgorithmId::Md2is, AlgorithmId::MisCentral, AlgorithmId::MisIdBased}) {
    CHECK(parse_algorithm(algorithm_token(id)) == id);
    CHECK(rules_for(id).algorithm == algorithm_token(id));
  }
  CHECK_THROWS_AS(parse_algorithm("MD2IS"), ParseError);
  CHECK_THROWS_AS(parse_algorithm(""), ParseError);
  CHECK_THROWS_AS(parse_algorithm("misid"), ParseError);
}

TEST_CASE("rule metadata") {
  const RuleSet md2is = md2is_rules();
  REQUIRE(md2is.rules.size() == 2);
  CHECK(md2is.rules[0].name == "R1");
  CHECK(md2is.rules[1].name == "R2");
  CHECK(md2is.dependency_radius == 2);
  CHECK(mis_central_rules().dependency_radius == 1);
  CHECK(mis_idbased_rules().dependency_radius == 2);
}

TEST_CASE("a single In neighbor at distance 2 blocks entry without eviction") {
  const Graph p3 = path_graph(3);
  // S = {0}: node 1 sees one In neighbor, so node 2 must not enter (it would
  // sit at distance 2 from node 0), and node 0 must not leave.
  CHECK(exp_of(p3, config_of({1, 0, 0}), 1) == 1);
  CHECK(enabled_set(p3, config_of({1, 0, 0}), md2is_rules()).empty());
}

TEST_CASE("two In nodes at distance 2 are both evicted candidates") {
  const Graph p3 = path_graph(3);
  // S = {0,2}: the shared neighbor has two In neighbors, enabling R2 at both.
  const Configuration c = config_of({1, 0, 1});
  CHECK(exp_of(p3, c, 1) == 2);
  CHECK(enabled_set(p3, c, md2is_rules()) == std::vector<NodeId>{0, 2});
  const auto r = enabled_rules(p3, c, 0, md2is_rules());
  REQUIRE(r.size() == 1);
  CHECK(r[0].name == "R2");
}

TEST_CASE("fixpoints are exactly the maximal sets, over every configuration") {
  for (const Graph& g : small_graphs()) {
    const std::uint32_t limit = 1u << g.node_count();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      const Configuration c = config_from_mask(g.node_count(), mask);
      const std::vector<NodeId> s = c.in_set_members();
      const bool md2is_fix = enabled_set(g, c, md2is_rules()).empty();
      CHECK(md2is_fix == is_maximal_d2is(g, s).holds);
      const bool mis_fix = enabled_set(g, c, mis_central_rules()).empty();
      CHECK(mis_fix == is_maximal_independent(g, s).holds);
      const bool misid_fix = enabled_set(g, c, mis_idbased_rules()).empty();
      CHECK(misid_fix == is_maximal_independent(g, s).holds);
    }
  }
}

TEST_CASE("central runs end in a maximal distance-2 independent set") {
  for (std::uint64_t gseed = 0; gseed < 6; ++gseed) {
    const Graph g = gen_random_graph({60, 0.08, gseed});
    const Configuration init = make_initial(60, {InitSpec::Kind::Random, 0.5}, gseed);
    const DaemonSpec spec{DaemonSpec::Kind::CentralRandom, "", 0.5, gseed + 200};
    const ExecutionTrace t = run_to_fixpoint(g, md2is_rules(), spec, init, 120);
    REQUIRE(t.converged);
    CHECK(is_maximal_d2is(g, t.final_config.in_set_members()).holds);

    const ExecutionTrace m = run_to_fixpoint(g, mis_central_rules(), spec, init, 120);
    REQUIRE(m.converged);
    CHECK(is_maximal_independent(g, m.final_config.in_set_members()).holds);
  }
}

TEST_CASE("the path on five nodes, stepped by hand") {
  const Graph p5 = path_graph(5);
  const RuleSet rules = md2is_rules();
  Configuration c = config_of({0, 0, 0, 0, 0});
  CHECK(enabled_set(p5, c, rules) == std::vector<NodeId>{0, 1, 2, 3, 4});
  c = apply_move(p5, c, 0, 0, rules);
  // Node 2 is now blocked by exp(1) = 1; nodes 3 and 4 stay enabled.
  CHECK(enabled_set(p5, c, rules) == std::vector<NodeId>{3, 4});
  c = apply_move(p5, c, 3, 0, rules);
  CHECK(enabled_set(p5, c, rules).empty());
  CHECK(c.in_set_members() == std::vector<NodeId>{0, 3});
  CHECK(is_maximal_d2is(p5, {0, 3}).holds);
}

TEST_CASE("complete graphs stabilize in one move from all-Out") {
  for (NodeId n : {2u, 3u, 6u, 9u}) {
    const Graph g = complete_graph(n);
    const DaemonSpec spec{DaemonSpec::Kind::CentralRandom, "", 0.5, n};
    for (const RuleSet& rules : {md2is_rules(), mis_central_rules()}) {
      const ExecutionTrace t =
          run_to_fixpoint(g, rules, spec, make_initial(n, {InitSpec::Kind::AllOut, 0}, 0), 2 * n);
      CHECK(t.converged);
      CHECK(t.moves.size() == 1);
      CHECK(t.cardinality() == 1);
    }
  }
}

TEST_CASE("an all-In edge sheds one endpoint and keeps the other") {
  const Graph edge = path_graph(2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DaemonSpec spec{DaemonSpec::Kind::CentralRandom, "", 0.5, seed};
    for (const RuleSet& rules : {md2is_rules(), mis_central_rules()}) {
      const ExecutionTrace t = run_to_fixpoint(edge, rules, spec, config_of({1, 1}), 4);
      CHECK(t.converged);
      CHECK(t.moves.size() == 1);
      CHECK(t.moves[0].new_state == NodeState::Out);
      CHECK(t.cardinality() == 1);
    }
  }
}

TEST_CASE("central move discipline: per-node order, counts, and the 2n bound") {
  const std::vector<std::string> daemon_tokens = {
      "central-random", "central-adversarial:min-id-first",
      "central-adversarial:max-degree-first", "central-adversarial:delay-r1"};
  for (std::uint64_t gseed = 0; gseed < 4; ++gseed) {
    const NodeId n = 50;
    const Graph g = gen_random_graph({n, 0.1, gseed + 60});
    for (const InitSpec init_spec :
         {InitSpec{InitSpec::Kind::AllOut, 0}, InitSpec{InitSpec::Kind::AllIn, 0},
          InitSpec{InitSpec::Kind::Random, 0.5}}) {
      const Configuration init = make_initial(n, init_spec, gseed);
      for (const std::string& token : daemon_tokens) {
        const DaemonSpec spec = DaemonSpec::parse(token, gseed + 7);
        const ExecutionTrace t = run_to_fixpoint(g, md2is_rules(), spec, init, 2 * n + 1);
        REQUIRE(t.converged);
        CHECK(t.moves.size() <= 2 * n);
        std::map<NodeId, std::vector<int>> per_node;
        for (const MoveRecord& rec : t.moves) per_node[rec.node].push_back(rec.rule_index);
        for (const auto& [node, fired] : per_node) {
          REQUIRE(fired.size() <= 2);
          // A node leaves at most once, enters at most once, in that order.
          if (fired.size() == 2) {
            CHECK(fired[0] == 1);
            CHECK(fired[1] == 0);
          }
        }
        // Entering is permanent: no move after a node's R1 move touches it.
        std::map<NodeId, std::size_t> last_seen;
        for (std::size_t i = 0; i < t.moves.size(); ++i) last_seen[t.moves[i].node] = i;
        for (std::size_t i = 0; i < t.moves.size(); ++i) {
          if (t.moves[i].rule_index == 0) CHECK(last_seen[t.moves[i].node] == i);
        }
      }
    }
  }
}

TEST_CASE("mis central rules: guards at radius one") {
  const RuleSet rules = mis_central_rules();
  const Graph p3 = path_graph(3);
  // Out with no In neighbor enters; In with an In neighbor leaves.
  const auto enter = enabled_rules(p3, config_of({0, 0, 0}), 0, rules);
  REQUIRE(enter.size() == 1);
  CHECK(enter[0].index == 0);  // R1 = enter
  const auto leave = enabled_rules(p3, config_of({1, 1, 0}), 0, rules);
  REQUIRE(leave.size() == 1);
  CHECK(leave[0].index == 1);  // R2 = leave
  // In with only Out neighbors is stable; Out with an In neighbor is stable.
  CHECK(enabled_rules(p3, config_of({1, 0, 1}), 0, rules).empty());
  CHECK(enabled_rules(p3, config_of({1, 0, 1}), 1, rules).empty());
}

TEST_CASE("the synchronous all-Out edge oscillates under mis") {
  const Graph edge = path_graph(2);
  const DaemonSpec spec{DaemonSpec::Kind::Synchronous, "", 0.5, 0};
  const ExecutionTrace t =
      run_to_fixpoint(edge, mis_central_rules(), spec, config_of({0, 0}), 40);
  CHECK(!t.converged);
  CHECK(t.moves.size() == 40);
  CHECK(t.final_config == config_of({0, 0}));  // even number of flips
}

TEST_CASE("mis-id breaks the tie by identifier") {
  const Graph edge = path_graph(2);
  const DaemonSpec spec{DaemonSpec::Kind::Synchronous, "", 0.5, 0};
  const ExecutionTrace t =
      run_to_fixpoint(edge, mis_idbased_rules(), spec, config_of({0, 0}), 40);
  CHECK(t.converged);
  CHECK(t.rounds == 1);
  CHECK(t.moves.size() == 1);
  CHECK(t.final_config.in_set_members() == std::vector<NodeId>{0});

  const Graph k3 = complete_graph(3);
  const ExecutionTrace s =
      run_to_fixpoint(k3, mis_idbased_rules(), spec, config_of({1, 1, 1}), 40);
  CHECK(s.converged);
  CHECK(s.rounds == 1);
  CHECK(s.moves.size() == 2);  // nodes 1 and 2 exit together
  CHECK(s.final_config.in_set_members() == std::vector<NodeId>{0});
}

TEST_CASE("mis-id converges synchronously on random graphs") {
  for (std::uint64_t gseed = 0; gseed < 6; ++gseed) {
    const Graph g = gen_random_graph({50, 0.1, gseed + 90});
    const DaemonSpec spec{DaemonSpec::Kind::Synchronous, "", 0.5, 0};
    for (const InitSpec init_spec :
         {InitSpec{InitSpec::Kind::AllOut, 0}, InitSpec{InitSpec::Kind::AllIn, 0},
          InitSpec{InitSpec::Kind::Random, 0.5}}) {
      const Configuration init = make_initial(50, init_spec, gseed);
      const ExecutionTrace t = run_to_fixpoint(g, mis_idbased_rules(), spec, init, 500);
      REQUIRE(t.converged);
      CHECK(is_maximal_independent(g, t.final_config.in_set_members()).holds);
    }
  }
}
