#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "scalefv/iteration.hpp"
#include "scalefv/models.hpp"
#include "scalefv/reference.hpp"
#include "scalefv/report.hpp"

namespace scalefv::cli {

namespace {

void add_run_options(CLI::App* sub, CliCommand& cmd) {
  sub->add_option("--model", cmd.model, "model name")->required();
  sub->add_option("--cells", cmd.overrides.cells, "cell count of the coarse mesh");
  sub->add_option("--cfl", cmd.overrides.cfl, "CFL coefficient in (0, 1]");
  sub->add_option("--alpha", cmd.overrides.alpha, "flux dissipation knob, at least 1");
  sub->add_option("--tfinal", cmd.overrides.t_final, "final time");
  sub->add_option("--tol", cmd.overrides.tol, "scaling iteration tolerance");
  sub->add_option("--max-iters", cmd.overrides.max_iters, "iteration cap");
  sub->add_option("--ref-cells", cmd.overrides.ref_cells, "reference mesh cell count");
  sub->add_option("--out", cmd.out_path, "output CSV path");
}

RunDefaults apply_overrides(const RunDefaults& defaults, const Overrides& ov) {
  RunDefaults cfg = defaults;
  if (ov.cells) cfg.n_cells = *ov.cells;
  if (ov.cfl) cfg.cfl = *ov.cfl;
  if (ov.alpha) cfg.alpha = *ov.alpha;
  if (ov.t_final) cfg.t_final = *ov.t_final;
  if (ov.tol) cfg.tol = *ov.tol;
  if (ov.max_iters) cfg.max_iters = *ov.max_iters;
  if (ov.ref_cells) cfg.reference_cells = *ov.ref_cells;
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void write_profile(const std::string& path, const Grid& grid, const CellField& q) {
  std::ofstream out = open_out(path);
  emit_profile_csv(grid, q, out);
}

const char* convexity_name(Convexity c) {
  switch (c) {
    case Convexity::Convex: return "convex";
    case Convexity::Concave: return "concave";
    case Convexity::Indefinite: return "indefinite";
  }
  return "indefinite";
}

void print_trace(const IterationTrace& trace) {
  for (const IterationRow& row : trace.rows) {
    if (row.e)
      std::printf("%3d  beta=%.9g  E=%.9g\n", row.n, row.beta, *row.e);
    else
      std::printf("%3d  beta=%.9g  E=-\n", row.n, row.beta);
  }
  std::printf("%s after %d solves\n", trace.converged ? "converged" : "did not converge",
              trace.iterations_used);
}

int execute_run(const ModelSpec& model, const RunDefaults& cfg, const std::string& out_path) {
  const Grid grid = build_grid(model_domain_a, model_domain_b, cfg.n_cells);
  const SpaceTimeField sol = direct_solution(model, grid, cfg);
  write_profile(out_path, grid, sol.final_level());
  std::printf("wrote %s (%d steps, dt=%.9g)\n", out_path.c_str(), sol.n_steps(), sol.dt);
  return 0;
}

int execute_iterate(const ModelSpec& model, const RunDefaults& cfg,
                    const std::string& out_path) {
  const Grid grid = build_grid(model_domain_a, model_domain_b, cfg.n_cells);
  const IterationTrace trace = iterate(model, grid, cfg);
  print_trace(trace);
  write_profile(out_path, grid, trace.final_field.final_level());
  std::printf("wrote %s\n", out_path.c_str());
  return trace.converged ? 0 : 3;
}

int execute_table(const ModelSpec& model, const RunDefaults& cfg,
                  const std::string& out_path) {
  const Grid grid = build_grid(model_domain_a, model_domain_b, cfg.n_cells);
  const IterationTrace trace = iterate(model, grid, cfg);
  const SpaceTimeField direct = direct_solution(model, grid, cfg);
  const ReferenceConfig rc{.n_cells = cfg.reference_cells};
  const CellField reference = reference_profile(model, grid, rc, cfg.t_final);
  const ConvergenceTable table = build_table(trace, trace.final_levels, reference,
                                             direct.final_level(), grid, model.name, cfg);
  std::ofstream out = open_out(out_path);
  emit_csv(table, out);
  std::printf("wrote %s (%zu rows, direct error %.9g, final tau %.9g)\n", out_path.c_str(),
              table.rows.size(), table.err_direct,
              table.rows.empty() ? 0.0 : table.rows.back().tau);
  return trace.converged ? 0 : 3;
}

int execute_hypotheses(const ModelSpec& model, const CliCommand& cmd) {
  const HypothesisReport rep = check_hypotheses(model, cmd.q_min, cmd.q_max, cmd.samples);
  std::printf("model=%s\n", model.name.c_str());
  std::printf("source_vanishes_at_zero=%s\n", rep.source_vanishes_at_zero ? "true" : "false");
  std::printf("lipschitz_estimate=%.9g\n", rep.lipschitz_estimate);
  std::printf("flux_convexity=%s\n", convexity_name(rep.flux_convexity));
  std::printf("flux_origin_conditions=%s\n", rep.flux_origin_conditions ? "true" : "false");
  return 0;
}

}  // namespace

CliCommand parse_args(const std::vector<std::string>& args) {
  CliCommand cmd;
  CLI::App app{"scalar balance-law solver"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "one direct solve, final profile to CSV");
  CLI::App* iterate =
      app.add_subcommand("iterate", "scaling iteration, trace to stdout and profile to CSV");
  CLI::App* table =
      app.add_subcommand("table", "full pipeline, convergence table to CSV");
  CLI::App* hypotheses =
      app.add_subcommand("hypotheses", "screen the model's structural assumptions");
  add_run_options(run, cmd);
  add_run_options(iterate, cmd);
  add_run_options(table, cmd);
  hypotheses->add_option("--model", cmd.model, "model name")->required();
  hypotheses->add_option("--qmin", cmd.q_min, "left end of the sampled state range");
  hypotheses->add_option("--qmax", cmd.q_max, "right end of the sampled state range");
  hypotheses->add_option("--samples", cmd.samples, "number of sample points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (run->parsed()) cmd.kind = CliCommand::Kind::Run;
  if (iterate->parsed()) cmd.kind = CliCommand::Kind::Iterate;
  if (table->parsed()) cmd.kind = CliCommand::Kind::Table;
  if (hypotheses->parsed()) cmd.kind = CliCommand::Kind::Hypotheses;
  return cmd;
}

int execute(const CliCommand& cmd) {
  const ModelSpec model = model_by_name(cmd.model);
  const RunDefaults cfg = apply_overrides(model.defaults, cmd.overrides);
  validate(cfg);
  switch (cmd.kind) {
    case CliCommand::Kind::Run:
      return execute_run(model, cfg,
                         cmd.out_path.empty() ? "run_" + model.name + ".csv" : cmd.out_path);
    case CliCommand::Kind::Iterate:
      return execute_iterate(
          model, cfg, cmd.out_path.empty() ? "iterate_" + model.name + ".csv" : cmd.out_path);
    case CliCommand::Kind::Table:
      return execute_table(
          model, cfg, cmd.out_path.empty() ? "table_" + model.name + ".csv" : cmd.out_path);
    case CliCommand::Kind::Hypotheses:
      return execute_hypotheses(model, cmd);
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args) {
  CliCommand cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const UsageError& u) {
    std::cerr << "error: " << u.what() << '\n';
    return 1;
  }
  try {
    return execute(cmd);
  } catch (const NonfiniteStateError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateSpeedError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateNormError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace scalefv::cli
