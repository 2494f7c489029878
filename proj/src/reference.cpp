#include "scalefv/reference.hpp"

#include <cmath>
#include <string>

#include "scalefv/scheme.hpp"

namespace scalefv {

namespace {

Eigen::ArrayXd minmod(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
  return 0.5 * (a.sign() + b.sign()) * a.abs().min(b.abs());
}

void validate_config(const ReferenceConfig& rc) {
  if (rc.n_cells < 2) throw std::invalid_argument("reference: need at least 2 cells");
  if (!(rc.cfl > 0.0 && rc.cfl <= 1.0))
    throw std::invalid_argument("reference: cfl must lie in (0, 1]");
}

/// One MUSCL-Hancock step. The extended array carries two ghosts, local
/// index j corresponds to global cell j - 2.
CellField mh_step(const CellField& q, const ModelSpec& model, double dx, double dt) {
  const Eigen::Index n = q.size();
  const Eigen::ArrayXd ext = extend_with_ghosts(q, model.bc, 2);

  // Limited slopes on the interior plus a one-cell ring, ext[1 .. n+2].
  const Eigen::ArrayXd qc = ext.segment(1, n + 2);
  const Eigen::ArrayXd dl = qc - ext.segment(0, n + 2);
  const Eigen::ArrayXd dr = ext.segment(2, n + 2) - qc;
  const Eigen::ArrayXd slope = minmod(dl, dr);

  const Eigen::ArrayXd qm = qc - 0.5 * slope;
  const Eigen::ArrayXd qp = qc + 0.5 * slope;
  const Eigen::ArrayXd advance =
      (dt / (2.0 * dx)) * (qp.unaryExpr(model.flux) - qm.unaryExpr(model.flux));
  const Eigen::ArrayXd kick = (0.5 * dt) * qc.unaryExpr(model.source);
  const Eigen::ArrayXd qm_half = qm - advance + kick;
  const Eigen::ArrayXd qp_half = qp - advance + kick;
  const Eigen::ArrayXd q_half = qc - advance + kick;

  Eigen::ArrayXd flux(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i)
    flux[i] = godunov_scalar_flux(qp_half[i], qm_half[i + 1], model.flux, model.wave_speed);

  CellField next = q - (dt / dx) * (flux.tail(n) - flux.head(n)) +
                   dt * q_half.segment(1, n).unaryExpr(model.source);
  if (!next.isFinite().all()) throw NonfiniteStateError("mh_step: non-finite cell value");
  return next;
}

}  // namespace

double godunov_scalar_flux(double qL, double qR, const ScalarFunc& f,
                           const ScalarFunc& wave_speed) {
  if (qL == qR) return f(qL);
  const bool want_min = qL < qR;
  const double lo = std::min(qL, qR);
  const double hi = std::max(qL, qR);
  double best = want_min ? std::min(f(lo), f(hi)) : std::max(f(lo), f(hi));

  double speed_lo = wave_speed(lo);
  if (speed_lo * wave_speed(hi) < 0.0) {
    // A stationary point sits strictly inside; bisect the speed to it.
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      const double speed_mid = wave_speed(mid);
      if (speed_lo * speed_mid <= 0.0) {
        b = mid;
      } else {
        a = mid;
        speed_lo = speed_mid;
      }
    }
    const double f_star = f(0.5 * (a + b));
    best = want_min ? std::min(best, f_star) : std::max(best, f_star);
  }
  return best;
}

CellField muscl_hancock_solve(const ModelSpec& model, const ReferenceConfig& rc,
                              double t_final) {
  validate_config(rc);
  if (!(t_final > 0.0))
    throw std::invalid_argument("muscl_hancock_solve: t_final must be positive");
  const Grid grid = build_grid(model_domain_a, model_domain_b, rc.n_cells);

  CellField q = sample_at_centers(model.initial_condition, grid);
  double t = 0.0;
  long step_count = 0;
  while (t_final - t > 1e-12 * t_final) {
    double dt = compute_dt(q, model, rc.cfl, grid.dx);
    if (t + dt > t_final) dt = t_final - t;
    try {
      q = mh_step(q, model, grid.dx, dt);
    } catch (const NonfiniteStateError&) {
      throw NonfiniteStateError("muscl_hancock_solve: non-finite state at step " +
                                std::to_string(step_count + 1));
    }
    t += dt;
    if (++step_count > 10'000'000)
      throw SolverError("muscl_hancock_solve: time stepping stalled");
  }
  return q;
}

CellField exact_advection_reaction(const ModelSpec& model, const Grid& grid, double t) {
  if (!model.exact_solution)
    throw WrongModelError("exact_advection_reaction: model '" + model.name +
                          "' has no closed-form solution");
  return grid.centers.unaryExpr([&](double x) { return model.exact_solution(x, t); });
}

CellField reference_profile(const ModelSpec& model, const Grid& coarse,
                            const ReferenceConfig& rc, double t_final) {
  if (model.exact_solution) return exact_advection_reaction(model, coarse, t_final);
  const Grid fine = build_grid(model_domain_a, model_domain_b, rc.n_cells);
  return interpolate_at_centers(muscl_hancock_solve(model, rc, t_final), fine, coarse);
}

}  // namespace scalefv
