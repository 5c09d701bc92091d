// SPDX-License-Identifier: Apache-2.0
#include "selfstab.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "selfstab/algorithms.hpp"
#include "selfstab/engine.hpp"
#include "selfstab/errors.hpp"
#include "selfstab/experiment.hpp"
#include "selfstab/graph.hpp"
#include "selfstab/state.hpp"
#include "selfstab/verify.hpp"

using namespace selfstab;

struct sstab_graph {
  Graph graph;
};

struct sstab_trace {
  ExecutionTrace trace;
};

struct sstab_rows {
  std::vector<ExperimentRow> rows;
};

namespace {

thread_local std::string last_error;

void set_error(const std::string& message) { last_error = message; }

// Runs the body and maps exceptions onto status codes.
template <typename Fn>
int guarded(Fn&& body) {
  try {
    body();
    last_error.clear();
    return SSTAB_OK;
  } catch (const ParseError& e) {
    set_error(e.what());
    return SSTAB_ERR_PARSE;
  } catch (const IoError& e) {
    set_error(e.what());
    return SSTAB_ERR_IO;
  } catch (const NonConvergenceError& e) {
    set_error(e.what());
    return SSTAB_ERR_NONCONVERGENCE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return SSTAB_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return SSTAB_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SSTAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SSTAB_ERR_INTERNAL;
  }
}

int require(bool ok, const char* message) {
  if (ok) return SSTAB_OK;
  set_error(message);
  return SSTAB_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* sstab_last_error(void) { return last_error.c_str(); }

int sstab_graph_generate(uint32_t nodes, double density, uint64_t seed, sstab_graph** out) {
  if (int rc = require(out != nullptr, "null out-parameter")) return rc;
  return guarded([&] { *out = new sstab_graph{gen_random_graph({nodes, density, seed})}; });
}

int sstab_graph_load(const char* path, sstab_graph** out) {
  if (int rc = require(path != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = new sstab_graph{load_edge_list(path)}; });
}

int sstab_graph_save(const sstab_graph* g, const char* path) {
  if (int rc = require(g != nullptr && path != nullptr, "null argument")) return rc;
  return guarded([&] { save_edge_list(g->graph, path); });
}

uint32_t sstab_graph_nodes(const sstab_graph* g) { return g ? g->graph.node_count() : 0; }

uint64_t sstab_graph_edges(const sstab_graph* g) { return g ? g->graph.edge_count() : 0; }

void sstab_graph_free(sstab_graph* g) { delete g; }

int sstab_run(const sstab_graph* g, const char* algo, const char* daemon, const char* init,
              uint64_t seed, uint64_t move_cap, sstab_trace** out) {
  if (int rc = require(g != nullptr && algo != nullptr && daemon != nullptr &&
                           init != nullptr && out != nullptr,
                       "null argument")) {
    return rc;
  }
  return guarded([&] {
    const AlgorithmId id = parse_algorithm(algo);
    const DaemonSpec spec = DaemonSpec::parse(daemon, 0);
    const InitSpec start = InitSpec::parse(init);
    *out = new sstab_trace{run_single(g->graph, id, spec, start, seed, move_cap)};
  });
}

int sstab_trace_converged(const sstab_trace* t) { return t && t->trace.converged ? 1 : 0; }

uint64_t sstab_trace_moves(const sstab_trace* t) { return t ? t->trace.moves.size() : 0; }

uint64_t sstab_trace_rounds(const sstab_trace* t) { return t ? t->trace.rounds : 0; }

uint64_t sstab_trace_cardinality(const sstab_trace* t) { return t ? t->trace.cardinality() : 0; }

int sstab_trace_save_csv(const sstab_trace* t, const char* path) {
  if (int rc = require(t != nullptr && path != nullptr, "null argument")) return rc;
  return guarded([&] { t->trace.save_trace_csv(path); });
}

int sstab_trace_save_final_state(const sstab_trace* t, const char* path) {
  if (int rc = require(t != nullptr && path != nullptr, "null argument")) return rc;
  return guarded([&] { save_state_file(t->trace.final_config, path); });
}

void sstab_trace_free(sstab_trace* t) { delete t; }

int sstab_verify_files(const char* graph_path, const char* state_path, const char* property,
                       int* holds, char* witness_buf, size_t witness_cap) {
  if (int rc = require(graph_path != nullptr && state_path != nullptr && property != nullptr &&
                           holds != nullptr,
                       "null argument")) {
    return rc;
  }
  return guarded([&] {
    const std::string prop = property;
    if (prop != "d2is" && prop != "mis") {
      throw ParseError("unknown property: " + prop + " (expected d2is|mis)");
    }
    const Graph g = load_edge_list(graph_path);
    const Configuration c = load_state_file(state_path, g.node_count());
    const PropertyReport report = prop == "d2is"
                                      ? is_maximal_d2is(g, c.in_set_members())
                                      : is_maximal_independent(g, c.in_set_members());
    *holds = report.holds ? 1 : 0;
    if (witness_buf != nullptr && witness_cap > 0) {
      const std::string w = report.witness_text();
      const size_t len = w.size() < witness_cap - 1 ? w.size() : witness_cap - 1;
      std::memcpy(witness_buf, w.data(), len);
      witness_buf[len] = '\0';
    }
  });
}

int sstab_experiment(const sstab_experiment_config* cfg, sstab_rows** out) {
  if (int rc = require(cfg != nullptr && out != nullptr, "null argument")) return rc;
  if (int rc = require(cfg->sizes != nullptr && cfg->densities != nullptr &&
                           cfg->algos != nullptr && cfg->daemon != nullptr &&
                           cfg->init != nullptr,
                       "null config field")) {
    return rc;
  }
  return guarded([&] {
    ExperimentSpec spec;
    spec.sizes = parse_sizes(cfg->sizes);
    spec.densities = parse_densities(cfg->densities);
    spec.trials = cfg->trials;
    spec.algorithms = parse_algorithms_list(cfg->algos);
    spec.daemon = DaemonSpec::parse(cfg->daemon, 0);
    spec.init = InitSpec::parse(cfg->init);
    spec.base_seed = cfg->seed;
    spec.move_cap = cfg->move_cap;
    *out = new sstab_rows{run_experiment(spec)};
  });
}

uint64_t sstab_rows_count(const sstab_rows* r) { return r ? r->rows.size() : 0; }

int sstab_rows_save_csv(const sstab_rows* r, const char* path) {
  if (int rc = require(r != nullptr && path != nullptr, "null argument")) return rc;
  return guarded([&] { save_rows_csv(r->rows, path); });
}

int sstab_rows_save_summary_csv(const sstab_rows* r, const char* path) {
  if (int rc = require(r != nullptr && path != nullptr, "null argument")) return rc;
  return guarded([&] { save_summary_csv(summarize(r->rows), path); });
}

void sstab_rows_free(sstab_rows* r) { delete r; }

int sstab_plot(const char* rows_csv_path, const char* axis, const char* out_path) {
  if (int rc = require(rows_csv_path != nullptr && axis != nullptr && out_path != nullptr,
                       "null argument")) {
    return rc;
  }
  return guarded([&] {
    const std::vector<ExperimentRow> rows = load_rows_csv(rows_csv_path);
    save_chart_svg(summarize(rows), parse_axis(axis), out_path);
  });
}

}  // extern "C"
