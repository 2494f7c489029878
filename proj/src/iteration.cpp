#include "scalefv/iteration.hpp"

#include <cmath>
#include <utility>

namespace scalefv {

double sup_norm(const SpaceTimeField& w) {
  return w.levels.abs().maxCoeff();
}

IterationTrace iterate(const ModelSpec& model, const Grid& grid, const RunDefaults& cfg) {
  validate(cfg);
  const TimeGrid tg = shared_time_grid(model, grid, cfg.cfl, cfg.t_final);

  SpaceTimeField w_prev = zero_space_time_field(tg.n_steps, grid.n_cells, tg.dt, cfg.t_final);
  double beta_prev = 1.0;

  IterationTrace trace;
  for (int n = 1; n <= cfg.max_iters; ++n) {
    SpaceTimeField w = solve(model, grid, tg.n_steps, tg.dt, cfg.alpha,
                             SourceMode::frozen(w_prev));
    const double sup = sup_norm(w);
    if (!(sup > 0.0))
      throw DegenerateNormError("iterate: iterate " + std::to_string(n) +
                                " vanishes identically, no scale can be formed");
    const double beta = 1.0 / sup;
    const double e = std::abs(beta_prev - beta);

    trace.rows.push_back({n, beta, n == 1 ? std::nullopt : std::optional<double>(e)});
    trace.final_levels.push_back(w.final_level());

    if (e <= cfg.tol || n == cfg.max_iters) {
      trace.final_field = std::move(w);
      trace.converged = e <= cfg.tol;
      trace.iterations_used = n;
      return trace;
    }
    w_prev = std::move(w);
    beta_prev = beta;
  }
  return trace;  // unreachable, the loop always returns
}

SpaceTimeField direct_solution(const ModelSpec& model, const Grid& grid,
                               const RunDefaults& cfg) {
  validate(cfg);
  const TimeGrid tg = shared_time_grid(model, grid, cfg.cfl, cfg.t_final);
  return solve(model, grid, tg.n_steps, tg.dt, cfg.alpha, SourceMode::direct());
}

}  // namespace scalefv
