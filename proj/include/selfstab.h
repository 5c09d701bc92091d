/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SELFSTAB_H
#define SELFSTAB_H

/* C interface to the self-stabilization toolkit. All entry points return a
 * status code; on failure sstab_last_error() describes what went wrong for
 * the calling thread. Out-parameters are written only on SSTAB_OK. Handles
 * are opaque and must be released with the matching _free function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  SSTAB_OK = 0,
  SSTAB_ERR_INVALID_ARGUMENT = 1,
  SSTAB_ERR_PARSE = 2,
  SSTAB_ERR_IO = 3,
  SSTAB_ERR_NONCONVERGENCE = 4,
  SSTAB_ERR_INTERNAL = 5
};

/* Message for the most recent failure on this thread; empty string if none. */
const char* sstab_last_error(void);

/* ---- graphs ---- */

typedef struct sstab_graph sstab_graph;

/* G(n, p) with the given seed; same arguments, same graph, on any platform. */
int sstab_graph_generate(uint32_t nodes, double density, uint64_t seed, sstab_graph** out);

/* Edge-list text file: header "n m", then m lines "u v" with u < v. */
int sstab_graph_load(const char* path, sstab_graph** out);
int sstab_graph_save(const sstab_graph* g, const char* path);

uint32_t sstab_graph_nodes(const sstab_graph* g);
uint64_t sstab_graph_edges(const sstab_graph* g);
void sstab_graph_free(sstab_graph* g);

/* ---- single runs ---- */

typedef struct sstab_trace sstab_trace;

/* Runs one algorithm to a fixpoint or to the move cap.
 *   algo:   md2is | mis | mis-id
 *   daemon: central-random | central-adversarial:NAME | distributed:Q | synchronous
 *   init:   all-out | all-in | random:P
 * The init and daemon random streams are derived from `seed`. move_cap 0
 * selects the per-daemon default. Hitting the cap is not an error here; ask
 * sstab_trace_converged. */
int sstab_run(const sstab_graph* g, const char* algo, const char* daemon, const char* init,
              uint64_t seed, uint64_t move_cap, sstab_trace** out);

int sstab_trace_converged(const sstab_trace* t); /* 1 = reached a fixpoint */
uint64_t sstab_trace_moves(const sstab_trace* t);
uint64_t sstab_trace_rounds(const sstab_trace* t);
uint64_t sstab_trace_cardinality(const sstab_trace* t);

/* CSV columns: step,node,rule,new_state,enabled_count_after. */
int sstab_trace_save_csv(const sstab_trace* t, const char* path);
/* One line per node: "<id> In|Out". */
int sstab_trace_save_final_state(const sstab_trace* t, const char* path);
void sstab_trace_free(sstab_trace* t);

/* ---- verification ---- */

/* property: d2is (maximal distance-2 independent set) | mis (maximal
 * independent set). Writes 1/0 to *holds; on a violation copies a witness
 * ("(a,b)" or "v") into witness_buf when witness_cap > 0. */
int sstab_verify_files(const char* graph_path, const char* state_path, const char* property,
                       int* holds, char* witness_buf, size_t witness_cap);

/* ---- experiments ---- */

typedef struct sstab_rows sstab_rows;

typedef struct sstab_experiment_config {
  const char* sizes;     /* "A:B:STEP" or comma list, e.g. "1000,5000" */
  const char* densities; /* comma list, e.g. "0.001,0.01" */
  uint32_t trials;
  const char* algos;     /* comma list of algorithm tokens */
  const char* daemon;    /* daemon token as in sstab_run */
  const char* init;      /* init token as in sstab_run */
  uint64_t seed;
  uint64_t move_cap;     /* 0 = per-daemon default */
} sstab_experiment_config;

/* One row per (size, density, trial, algorithm); the whole sweep is a pure
 * function of the config. A central-daemon md2is trial that fails to
 * converge aborts with SSTAB_ERR_NONCONVERGENCE. */
int sstab_experiment(const sstab_experiment_config* cfg, sstab_rows** out);

uint64_t sstab_rows_count(const sstab_rows* r);
int sstab_rows_save_csv(const sstab_rows* r, const char* path);
int sstab_rows_save_summary_csv(const sstab_rows* r, const char* path);
void sstab_rows_free(sstab_rows* r);

/* Reads a rows CSV (as written by sstab_rows_save_csv), aggregates it, and
 * writes a line chart of mean cardinality against axis "size" or "density"
 * as a standalone SVG. */
int sstab_plot(const char* rows_csv_path, const char* axis, const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* SELFSTAB_H */
