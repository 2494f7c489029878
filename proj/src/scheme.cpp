#include "scalefv/scheme.hpp"

#include <cmath>
#include <string>

namespace scalefv {

namespace {

void validate_params(const SchemeParams& p) {
  if (!(p.cfl > 0.0 && p.cfl <= 1.0))
    throw std::invalid_argument("scheme: cfl must lie in (0, 1]");
  if (!(p.alpha >= 1.0)) throw std::invalid_argument("scheme: alpha must be at least 1");
  if (!(p.dx > 0.0)) throw std::invalid_argument("scheme: dx must be positive");
  if (!(p.dt > 0.0)) throw std::invalid_argument("scheme: dt must be positive");
}

}  // namespace

double lf_alpha_flux(double qL, double qR, const ScalarFunc& f, const SchemeParams& p) {
  return 0.5 * (f(qL) + f(qR)) - p.dx / (2.0 * p.alpha * p.dt) * (qR - qL);
}

double lw_alpha_flux(double qL, double qR, const ScalarFunc& f, const SchemeParams& p) {
  const double q_star = 0.5 * (qL + qR) - p.alpha * p.dt / (2.0 * p.dx) * (f(qR) - f(qL));
  return f(q_star);
}

double force_alpha_flux(double qL, double qR, const ScalarFunc& f, const SchemeParams& p) {
  return 0.5 * (lf_alpha_flux(qL, qR, f, p) + lw_alpha_flux(qL, qR, f, p));
}

double compute_dt(const CellField& field, const ModelSpec& model, double cfl, double dx) {
  if (!(cfl > 0.0 && cfl <= 1.0))
    throw std::invalid_argument("compute_dt: cfl must lie in (0, 1]");
  if (!(dx > 0.0)) throw std::invalid_argument("compute_dt: dx must be positive");
  const double max_speed =
      field.unaryExpr([&](double q) { return std::abs(model.wave_speed(q)); }).maxCoeff();
  if (max_speed < 1e-12)
    throw DegenerateSpeedError("compute_dt: largest wave speed below 1e-12");
  return cfl * dx / max_speed;
}

CellField step(const CellField& prev, const Eigen::ArrayXd& source_values,
               const ModelSpec& model, const SchemeParams& p, BoundaryKind bc) {
  validate_params(p);
  if (source_values.size() != prev.size())
    throw LengthMismatchError("step: source array length differs from the field");
  const Eigen::Index n = prev.size();
  const Eigen::ArrayXd ext = extend_with_ghosts(prev, bc, 1);
  Eigen::ArrayXd flux(n + 1);
  for (Eigen::Index j = 0; j <= n; ++j)
    flux[j] = force_alpha_flux(ext[j], ext[j + 1], model.flux, p);
  CellField next = prev - (p.dt / p.dx) * (flux.tail(n) - flux.head(n)) + p.dt * source_values;
  if (!next.isFinite().all()) throw NonfiniteStateError("step: non-finite cell value");
  return next;
}

SpaceTimeField solve(const ModelSpec& model, const Grid& grid, int n_steps, double dt,
                     double alpha, const SourceMode& mode) {
  if (n_steps < 1) throw std::invalid_argument("solve: need at least one step");
  if (!(dt > 0.0)) throw std::invalid_argument("solve: dt must be positive");
  const SpaceTimeField* frozen = mode.payload();
  if (frozen) {
    if (frozen->n_steps() != n_steps || frozen->n_cells() != grid.n_cells)
      throw MeshMismatchError("solve: frozen source does not share the run mesh");
    if (std::abs(frozen->dt - dt) > 1e-12 * dt)
      throw MeshMismatchError("solve: frozen source uses a different time step");
  }

  SpaceTimeField out = zero_space_time_field(n_steps, grid.n_cells, dt, n_steps * dt);
  out.levels.row(0) = sample_at_centers(model.initial_condition, grid).transpose();
  const SchemeParams p{.cfl = 1.0, .alpha = alpha, .dx = grid.dx, .dt = dt};

  for (int m = 0; m < n_steps; ++m) {
    const CellField prev = out.level(m);
    const CellField source_basis = frozen ? frozen->level(m) : prev;
    const Eigen::ArrayXd source_values = source_basis.unaryExpr(model.source);
    CellField next;
    try {
      next = step(prev, source_values, model, p, model.bc);
    } catch (const NonfiniteStateError&) {
      throw NonfiniteStateError("solve: non-finite state at step " + std::to_string(m + 1) +
                                " of " + std::to_string(n_steps));
    }
    out.levels.row(m + 1) = next.transpose();
  }
  return out;
}

TimeGrid shared_time_grid(const ModelSpec& model, const Grid& grid, double cfl,
                          double t_final) {
  if (!(t_final > 0.0))
    throw std::invalid_argument("shared_time_grid: t_final must be positive");
  const CellField ic = sample_at_centers(model.initial_condition, grid);
  const double dt0 = compute_dt(ic, model, cfl, grid.dx);
  const int n_steps = std::max(1, static_cast<int>(std::ceil(t_final / dt0)));
  return {.dt = t_final / n_steps, .n_steps = n_steps};
}

}  // namespace scalefv
