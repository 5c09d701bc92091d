// SPDX-License-Identifier: Apache-2.0
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "selfstab.h"

namespace {

int exit_code_for(int status) {
  switch (status) {
    case SSTAB_OK:
      return 0;
    case SSTAB_ERR_NONCONVERGENCE:
      return 1;
    default:
      return 2;  // usage, parse, or I/O trouble
  }
}

int fail(int status) {
  std::fprintf(stderr, "error: %s\n", sstab_last_error());
  return exit_code_for(status);
}

struct GenArgs {
  std::uint32_t nodes = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int do_gen(const GenArgs& a) {
  sstab_graph* g = nullptr;
  int rc = sstab_graph_generate(a.nodes, a.density, a.seed, &g);
  if (rc != SSTAB_OK) return fail(rc);
  rc = sstab_graph_save(g, a.out.c_str());
  sstab_graph_free(g);
  if (rc != SSTAB_OK) return fail(rc);
  return 0;
}

struct RunArgs {
  std::string graph;
  std::string algo;
  std::string daemon = "central-random";
  std::string init = "random:0.5";
  std::uint64_t seed = 0;
  std::uint64_t move_cap = 0;
  std::string trace_path;
  std::string final_state_path;
};

int do_run(const RunArgs& a) {
  sstab_graph* g = nullptr;
  int rc = sstab_graph_load(a.graph.c_str(), &g);
  if (rc != SSTAB_OK) return fail(rc);

  sstab_trace* t = nullptr;
  rc = sstab_run(g, a.algo.c_str(), a.daemon.c_str(), a.init.c_str(), a.seed, a.move_cap, &t);
  sstab_graph_free(g);
  if (rc != SSTAB_OK) return fail(rc);

  if (!a.trace_path.empty()) {
    rc = sstab_trace_save_csv(t, a.trace_path.c_str());
    if (rc != SSTAB_OK) {
      sstab_trace_free(t);
      return fail(rc);
    }
  }
  if (!a.final_state_path.empty()) {
    rc = sstab_trace_save_final_state(t, a.final_state_path.c_str());
    if (rc != SSTAB_OK) {
      sstab_trace_free(t);
      return fail(rc);
    }
  }

  const int converged = sstab_trace_converged(t);
  std::printf("converged=%s moves=%" PRIu64 " rounds=%" PRIu64 " cardinality=%" PRIu64 "\n",
              converged ? "true" : "false", sstab_trace_moves(t), sstab_trace_rounds(t),
              sstab_trace_cardinality(t));
  sstab_trace_free(t);
  return converged ? 0 : 1;
}

struct VerifyArgs {
  std::string graph;
  std::string state;
  std::string property;
};

int do_verify(const VerifyArgs& a) {
  int holds = 0;
  char witness[256] = {0};
  const int rc = sstab_verify_files(a.graph.c_str(), a.state.c_str(), a.property.c_str(), &holds,
                                    witness, sizeof witness);
  if (rc != SSTAB_OK) return fail(rc);
  if (holds) {
    std::printf("OK %s\n", a.property.c_str());
    return 0;
  }
  std::printf("FAIL %s witness=%s\n", a.property.c_str(), witness);
  return 1;
}

struct ExperimentArgs {
  std::string sizes;
  std::string densities;
  std::uint32_t trials = 5;
  std::string algos = "md2is";
  std::string daemon = "central-random";
  std::string init = "random:0.5";
  std::uint64_t seed = 0;
  std::uint64_t move_cap = 0;
  std::string out;
  std::string summary;
};

int do_experiment(const ExperimentArgs& a) {
  sstab_experiment_config cfg{};
  cfg.sizes = a.sizes.c_str();
  cfg.densities = a.densities.c_str();
  cfg.trials = a.trials;
  cfg.algos = a.algos.c_str();
  cfg.daemon = a.daemon.c_str();
  cfg.init = a.init.c_str();
  cfg.seed = a.seed;
  cfg.move_cap = a.move_cap;

  sstab_rows* rows = nullptr;
  int rc = sstab_experiment(&cfg, &rows);
  if (rc != SSTAB_OK) return fail(rc);
  rc = sstab_rows_save_csv(rows, a.out.c_str());
  if (rc == SSTAB_OK && !a.summary.empty()) {
    rc = sstab_rows_save_summary_csv(rows, a.summary.c_str());
  }
  sstab_rows_free(rows);
  if (rc != SSTAB_OK) return fail(rc);
  return 0;
}

struct PlotArgs {
  std::string in;
  std::string axis;
  std::string out;
};

int do_plot(const PlotArgs& a) {
  const int rc = sstab_plot(a.in.c_str(), a.axis.c_str(), a.out.c_str());
  if (rc != SSTAB_OK) return fail(rc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and verifier for self-stabilizing independent-set algorithms"};
  app.require_subcommand(1);
  int result = 0;

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random graph edge list");
  gen->add_option("--nodes", gen_args.nodes, "Node count")->required();
  gen->add_option("--density", gen_args.density, "Edge probability in [0, 1]")->required();
  gen->add_option("--seed", gen_args.seed, "Generator seed (default 0)");
  gen->add_option("--out", gen_args.out, "Output edge-list file")->required();
  gen->callback([&] { result = do_gen(gen_args); });

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run one algorithm to a fixpoint");
  run->add_option("--graph", run_args.graph, "Edge-list file")->required();
  run->add_option("--algo", run_args.algo, "md2is|mis|mis-id")->required();
  run->add_option("--daemon", run_args.daemon,
                  "central-random|central-adversarial:NAME|distributed:Q|synchronous");
  run->add_option("--init", run_args.init, "all-out|all-in|random:P");
  run->add_option("--seed", run_args.seed, "Run seed (default 0)");
  run->add_option("--move-cap", run_args.move_cap, "Move cap; 0 = per-daemon default");
  run->add_option("--trace", run_args.trace_path, "Write the move trace CSV here");
  run->add_option("--final-state", run_args.final_state_path, "Write the final state here");
  run->callback([&] { result = do_run(run_args); });

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check a state file against a property");
  verify->add_option("--graph", verify_args.graph, "Edge-list file")->required();
  verify->add_option("--state", verify_args.state, "State file")->required();
  verify->add_option("--property", verify_args.property, "d2is|mis")->required();
  verify->callback([&] { result = do_verify(verify_args); });

  ExperimentArgs exp_args;
  CLI::App* experiment = app.add_subcommand("experiment", "Run a parameter sweep");
  experiment->add_option("--sizes", exp_args.sizes, "A:B:STEP or comma list")->required();
  experiment->add_option("--densities", exp_args.densities, "Comma list")->required();
  experiment->add_option("--trials", exp_args.trials, "Trials per cell (default 5)");
  experiment->add_option("--algos", exp_args.algos, "Comma list (default md2is)");
  experiment->add_option("--daemon", exp_args.daemon, "Daemon token");
  experiment->add_option("--init", exp_args.init, "Init token");
  experiment->add_option("--seed", exp_args.seed, "Base seed (default 0)");
  experiment->add_option("--move-cap", exp_args.move_cap, "Move cap; 0 = per-daemon default");
  experiment->add_option("--out", exp_args.out, "Rows CSV output")->required();
  experiment->add_option("--summary", exp_args.summary, "Summary CSV output");
  experiment->callback([&] { result = do_experiment(exp_args); });

  PlotArgs plot_args;
  CLI::App* plot = app.add_subcommand("plot", "Render a chart from a rows CSV");
  plot->add_option("--in", plot_args.in, "Rows CSV")->required();
  plot->add_option("--x", plot_args.axis, "size|density")->required();
  plot->add_option("--out", plot_args.out, "SVG output")->required();
  plot->callback([&] { result = do_plot(plot_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return result;
}
