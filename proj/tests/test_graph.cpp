// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "selfstab/errors.hpp"
#include "selfstab/graph.hpp"
#include "selfstab/rng.hpp"
#include "selfstab/state.hpp"

using namespace selfstab;
using namespace fixtures;

TEST_CASE("mix64 matches the frozen reference value and separates inputs") {
  // First output of the reference splitmix64 stream seeded with 0.
  CHECK(mix64(0, 0) == 0xE220A8397B1DCDAFull);
  // Distinct second arguments under a fixed first argument must stay
  // distinct; that is the shape every seed-derivation chain uses.
  std::set<std::uint64_t> seen;
  for (std::uint64_t v = 0; v < 200; ++v) seen.insert(mix64(7, v));
  CHECK(seen.size() == 200);
}

TEST_CASE("bounded stays in range and hits every residue") {
  std::mt19937_64 rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 400; ++i) {
    const std::uint64_t r = bounded(rng, 7);
    CHECK(r < 7);
    seen.insert(r);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("unit_double lies in [0,1)") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const double u = unit_double(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("from_edges builds sorted adjacency") {
  const Graph g = Graph::from_edges(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  const auto nb = g.neighbors(0);
  CHECK(std::vector<NodeId>(nb.begin(), nb.end()) == std::vector<NodeId>{1, 3});
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("from_edges rejects malformed input") {
  CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("degree and neighbors reject out-of-range nodes") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(g.degree(3), std::out_of_range);
  CHECK_THROWS_AS(g.neighbors(7), std::out_of_range);
}

TEST_CASE("dist2_neighborhood on structured graphs") {
  const Graph p5 = path_graph(5);
  CHECK(p5.dist2_neighborhood(2) == std::vector<NodeId>{0, 1, 3, 4});
  CHECK(p5.dist2_neighborhood(0) == std::vector<NodeId>{1, 2});

  const Graph star = star_graph(6);
  CHECK(star.dist2_neighborhood(1) == std::vector<NodeId>{0, 2, 3, 4, 5});

  const Graph k4 = complete_graph(4);
  CHECK(k4.dist2_neighborhood(1) == std::vector<NodeId>{0, 2, 3});

  CHECK(edgeless_graph(3).dist2_neighborhood(1).empty());
}

TEST_CASE("pairwise_distance_gt2 on the path") {
  const Graph p5 = path_graph(5);
  CHECK(!p5.pairwise_distance_gt2(0, 1));
  CHECK(!p5.pairwise_distance_gt2(0, 2));
  CHECK(p5.pairwise_distance_gt2(0, 3));
  CHECK(p5.pairwise_distance_gt2(4, 0));
  CHECK_THROWS_AS(p5.pairwise_distance_gt2(2, 2), std::invalid_argument);
}

TEST_CASE("pairwise_distance_gt2 agrees with dist2_neighborhood") {
  const Graph g = gen_random_graph({40, 0.08, 11});
  for (NodeId a = 0; a < g.node_count(); ++a) {
    const std::vector<NodeId> ball = g.dist2_neighborhood(a);
    for (NodeId b = 0; b < g.node_count(); ++b) {
      if (a == b) continue;
      const bool near = std::binary_search(ball.begin(), ball.end(), b);
      CHECK(g.pairwise_distance_gt2(a, b) == !near);
    }
  }
}

TEST_CASE("gen_random_graph is a pure function of its spec") {
  const Graph a = gen_random_graph({50, 0.1, 123});
  const Graph b = gen_random_graph({50, 0.1, 123});
  const Graph c = gen_random_graph({50, 0.1, 124});
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("gen_random_graph density extremes") {
  CHECK(gen_random_graph({20, 0.0, 5}).edge_count() == 0);
  CHECK(gen_random_graph({20, 1.0, 5}).edge_count() == 190);
  CHECK(gen_random_graph({1, 0.5, 5}).edge_count() == 0);
}

TEST_CASE("gen_random_graph edge count is near n-choose-2 times density") {
  const Graph g = gen_random_graph({200, 0.1, 42});
  // 19900 pairs at p=0.1: mean 1990, stddev ~42; a 7-sigma band.
  CHECK(g.edge_count() > 1690);
  CHECK(g.edge_count() < 2290);
}

TEST_CASE("gen_random_graph rejects bad specs") {
  CHECK_THROWS_AS(gen_random_graph({0, 0.5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_graph({5, -0.1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_graph({5, 1.5, 1}), std::invalid_argument);
}

TEST_CASE("edge list round-trips") {
  const Graph g = gen_random_graph({30, 0.15, 9});
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);
}

TEST_CASE("edge list text form is exact") {
  const Graph g = Graph::from_edges(3, {{1, 2}, {0, 2}});
  std::ostringstream out;
  write_edge_list(g, out);
  CHECK(out.str() == "3 2\n0 2\n1 2\n");
}

TEST_CASE("edge list parser rejects malformed input") {
  const auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x y\n"), ParseError);
  CHECK_THROWS_AS(parse("0 0\n"), ParseError);          // n must be >= 1
  CHECK_THROWS_AS(parse("3 1\n"), ParseError);          // missing edge line
  CHECK_THROWS_AS(parse("3 1\n1 0\n"), ParseError);     // u < v violated
  CHECK_THROWS_AS(parse("3 1\n1 1\n"), ParseError);     // self-loop
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), ParseError);     // id out of range
  CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse("3 1\n0 1\n0 2\n"), ParseError);  // trailing content
  CHECK_THROWS_AS(parse("3 1\n0 1 2\n"), ParseError);   // extra token
  CHECK(parse("3 1\n0 1\n\n  \n").edge_count() == 1);   // blank tails are fine
}

TEST_CASE("InitSpec parses the three presets") {
  CHECK(InitSpec::parse("all-out").kind == InitSpec::Kind::AllOut);
  CHECK(InitSpec::parse("all-in").kind == InitSpec::Kind::AllIn);
  const InitSpec r = InitSpec::parse("random:0.25");
  CHECK(r.kind == InitSpec::Kind::Random);
  CHECK(r.p == 0.25);
  CHECK(r.token() == "random:0.25");
  CHECK(InitSpec::parse("all-in").token() == "all-in");
  CHECK_THROWS_AS(InitSpec::parse("random:"), ParseError);
  CHECK_THROWS_AS(InitSpec::parse("random:1.5"), ParseError);
  CHECK_THROWS_AS(InitSpec::parse("random:x"), ParseError);
  CHECK_THROWS_AS(InitSpec::parse("half"), ParseError);
}

TEST_CASE("make_initial presets") {
  const Configuration out = make_initial(5, {InitSpec::Kind::AllOut, 0.0}, 1);
  CHECK(out.cardinality() == 0);
  const Configuration in = make_initial(5, {InitSpec::Kind::AllIn, 0.0}, 1);
  CHECK(in.cardinality() == 5);
  CHECK(in.size() == 5);

  const Configuration r1 = make_initial(2000, {InitSpec::Kind::Random, 0.5}, 77);
  const Configuration r2 = make_initial(2000, {InitSpec::Kind::Random, 0.5}, 77);
  const Configuration r3 = make_initial(2000, {InitSpec::Kind::Random, 0.5}, 78);
  CHECK(r1 == r2);
  CHECK(r1 != r3);
  CHECK(r1.cardinality() > 850);  // ~7 sigma around 1000
  CHECK(r1.cardinality() < 1150);
  CHECK(make_initial(1000, {InitSpec::Kind::Random, 0.0}, 3).cardinality() == 0);
  CHECK(make_initial(1000, {InitSpec::Kind::Random, 1.0}, 3).cardinality() == 1000);
}

TEST_CASE("configuration helpers") {
  const Configuration c = config_of({1, 0, 1, 0});
  CHECK(c.size() == 4);
  CHECK(c.cardinality() == 2);
  CHECK(c.in_set(0));
  CHECK(!c.in_set(1));
  CHECK(c.in_set_members() == std::vector<NodeId>{0, 2});
}

TEST_CASE("state file round-trips and accepts any line order") {
  const Configuration c = config_of({0, 1, 1, 0, 1});
  std::ostringstream out;
  write_state_file(c, out);
  CHECK(out.str() == "0 Out\n1 In\n2 In\n3 Out\n4 In\n");

  std::istringstream shuffled("4 In\n0 Out\n2 In\n1 In\n3 Out\n");
  CHECK(read_state_file(shuffled, 5) == c);
}

TEST_CASE("state file parser rejects malformed input") {
  const auto parse = [](const char* text, NodeId n) {
    std::istringstream in(text);
    return read_state_file(in, n);
  };
  CHECK_THROWS_AS(parse("0 In\n", 2), ParseError);            // missing node 1
  CHECK_THROWS_AS(parse("0 In\n0 Out\n", 1), ParseError);     // duplicate
  CHECK_THROWS_AS(parse("0 in\n", 1), ParseError);            // case matters
  CHECK_THROWS_AS(parse("1 In\n", 1), ParseError);            // out of range
  CHECK_THROWS_AS(parse("0 In extra\n", 1), ParseError);      // trailing token
  CHECK_THROWS_AS(parse("zero In\n", 1), ParseError);
}

TEST_CASE("load/save wrappers surface IoError with the path") {
  CHECK_THROWS_AS(load_edge_list("/nonexistent/g.txt"), IoError);
  CHECK_THROWS_AS(load_state_file("/nonexistent/s.txt", 3), IoError);
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(save_edge_list(g, "/nonexistent/dir/g.txt"), IoError);
}
