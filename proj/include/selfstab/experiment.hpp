// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "selfstab/algorithms.hpp"
#include "selfstab/daemon.hpp"
#include "selfstab/engine.hpp"
#include "selfstab/graph.hpp"
#include "selfstab/state.hpp"

namespace selfstab {

// A parameter sweep: trials x sizes x densities x algorithms under one
// daemon kind and one init preset.
struct ExperimentSpec {
  std::vector<NodeId> sizes;
  std::vector<double> densities;
  std::uint32_t trials = 5;
  std::vector<AlgorithmId> algorithms;
  DaemonSpec daemon;  // its seed field is ignored; per-trial seeds are derived
  InitSpec init;
  std::uint64_t base_seed = 0;
  std::uint64_t move_cap = 0;  // 0 = per-daemon default cap
};

// One (size, density, trial, algorithm) measurement.
struct ExperimentRow {
  NodeId n = 0;
  double density = 0.0;
  std::uint32_t trial = 0;
  std::uint64_t seed = 0;  // the derived trial seed
  std::string algorithm;
  std::string daemon;
  std::string init;
  std::uint64_t cardinality = 0;
  double cardinality_pct = 0.0;  // 100*cardinality/n, pre-rounded to 2 decimals
  std::uint64_t moves = 0;
  std::uint64_t rounds = 0;
  bool converged = false;

  bool operator==(const ExperimentRow&) const = default;
};

// Per-cell aggregate over the trials of one (n, density, algorithm).
struct SummaryRow {
  NodeId n = 0;
  double density = 0.0;
  std::string algorithm;
  std::uint32_t trials = 0;
  double cardinality_mean = 0.0;
  double cardinality_pct_mean = 0.0;
  std::uint64_t cardinality_min = 0;
  std::uint64_t cardinality_max = 0;
  double cardinality_stddev = 0.0;  // population stddev
  double moves_mean = 0.0;
  std::uint64_t moves_min = 0;
  std::uint64_t moves_max = 0;
  double moves_stddev = 0.0;

  bool operator==(const SummaryRow&) const = default;
};

// Positional seed for one sweep cell, so any (n, density, trial) reruns
// identically in isolation.
std::uint64_t trial_seed(std::uint64_t base_seed, NodeId n, double density, std::uint32_t trial);

// One run the way the CLI does it: the init and daemon streams are derived
// from `seed` with fixed tags; move_cap 0 means the per-daemon default.
ExecutionTrace run_single(const Graph& g, AlgorithmId algo, DaemonSpec daemon,
                          const InitSpec& init, std::uint64_t seed, std::uint64_t move_cap);

// Runs the sweep; one row per (size, density, trial, algorithm), sorted by
// (n, density, algorithm, trial). The graph is regenerated per trial from
// the derived seed. A central-daemon md2is trial that fails to converge
// throws NonConvergenceError: with the default cap that means the move bound
// was exceeded, which is an engine bug, not a data point.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

// Aggregates rows into one SummaryRow per (n, density, algorithm), sorted.
// Rejects an empty row list.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows);

// Rows CSV, columns:
//   n,density,trial,seed,algorithm,daemon,init,cardinality,cardinality_pct,
//   moves,rounds,converged
// Doubles print shortest-round-trip except cardinality_pct (2 decimals);
// read(write(rows)) == rows exactly.
void write_rows_csv(const std::vector<ExperimentRow>& rows, std::ostream& out);
std::string rows_csv(const std::vector<ExperimentRow>& rows);
void save_rows_csv(const std::vector<ExperimentRow>& rows, const std::string& path);
std::vector<ExperimentRow> read_rows_csv(std::istream& in);
std::vector<ExperimentRow> load_rows_csv(const std::string& path);

// Summary CSV, columns:
//   n,density,algorithm,trials,cardinality_mean,cardinality_pct_mean,
//   cardinality_min,cardinality_max,cardinality_stddev,moves_mean,moves_min,
//   moves_max,moves_stddev
void write_summary_csv(const std::vector<SummaryRow>& cells, std::ostream& out);
void save_summary_csv(const std::vector<SummaryRow>& cells, const std::string& path);

// Comma lists plus the A:B:STEP range form for sizes. Duplicates rejected.
std::vector<NodeId> parse_sizes(const std::string& token);
std::vector<double> parse_densities(const std::string& token);
std::vector<AlgorithmId> parse_algorithms_list(const std::string& token);

enum class ChartAxis { Size, Density };
ChartAxis parse_axis(const std::string& token);

// Line chart of mean cardinality against the chosen axis, one series per
// (algorithm x remaining dimension), as a standalone SVG. Series with a
// single point render as markers only. Rejects an empty cell list.
void write_chart_svg(const std::vector<SummaryRow>& cells, ChartAxis x, std::ostream& out);
std::string chart_svg(const std::vector<SummaryRow>& cells, ChartAxis x);
void save_chart_svg(const std::vector<SummaryRow>& cells, ChartAxis x, const std::string& path);

}  // namespace selfstab
