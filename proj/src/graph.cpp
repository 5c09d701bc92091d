// SPDX-License-Identifier: Apache-2.0
#include "selfstab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "selfstab/errors.hpp"
#include "selfstab/rng.hpp"

namespace selfstab {

void Graph::check_node(NodeId v) const {
  if (v >= n_) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range [0, " +
                            std::to_string(n_) + ")");
  }
}

Graph Graph::from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  if (n == 0) throw std::invalid_argument("graph needs at least one node");

  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }

  Graph g;
  g.n_ = n;
  g.m_ = edges.size();
  g.offsets_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);

  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (NodeId v = 0; v < n; ++v) {
    auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at node " + std::to_string(v));
    }
  }
  return g;
}

std::uint32_t Graph::degree(NodeId v) const {
  check_node(v);
  return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(v);
  return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
}

std::vector<NodeId> Graph::dist2_neighborhood(NodeId v) const {
  check_node(v);
  std::vector<std::uint8_t> mark(n_, 0);
  std::vector<NodeId> out;
  for (NodeId u : neighbors(v)) {
    if (!mark[u]) {
      mark[u] = 1;
      out.push_back(u);
    }
    for (NodeId w : neighbors(u)) {
      if (w != v && !mark[w]) {
        mark[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::pairwise_distance_gt2(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  if (a == b) throw std::invalid_argument("pairwise_distance_gt2 requires distinct nodes");
  if (has_edge(a, b)) return false;
  for (NodeId u : neighbors(a)) {
    if (has_edge(u, b)) return false;
  }
  return true;
}

Graph gen_random_graph(const GraphGenSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("graph generation requires n >= 1");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (spec.density > 0.0) {
    for (NodeId u = 0; u + 1 < spec.n; ++u) {
      for (NodeId v = u + 1; v < spec.n; ++v) {
        if (unit_double(rng) < spec.density) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(spec.n, edges);
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw ParseError("edge list line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError("edge list: empty input");
  ++lineno;
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 1 || m < 0 || !(header >> std::ws).eof()) {
    parse_fail(lineno, "expected header \"n m\"");
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) parse_fail(lineno + 1, "unexpected end of input");
    ++lineno;
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || !(row >> std::ws).eof()) parse_fail(lineno, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) parse_fail(lineno, "node id out of range");
    if (u == v) parse_fail(lineno, "self-loop");
    if (u > v) parse_fail(lineno, "edges must satisfy u < v");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      parse_fail(lineno, "trailing content after " + std::to_string(m) + " edges");
    }
  }

  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError("edge list: duplicate edge");
  }
  return Graph::from_edges(static_cast<NodeId>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v > u) out << u << ' ' << v << '\n';
    }
  }
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  return read_edge_list(in);
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file: " + path);
  write_edge_list(g, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace selfstab
