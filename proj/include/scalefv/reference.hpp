#pragma once

#include "scalefv/models.hpp"

namespace scalefv {

enum class Limiter { Minmod };

/// Settings of the fine-mesh comparison solve.
struct ReferenceConfig {
  int n_cells = 1000;
  double cfl = 0.9;
  Limiter limiter = Limiter::Minmod;
};

/// Exact Riemann flux of a scalar conservation law:
///   qL <= qR: min of f over [qL, qR],  otherwise: max of f over [qR, qL].
/// Endpoints always compete; an interior stationary point is bracketed by
/// a sign change of wave_speed and located by bisection, which is exact
/// for the monotone wave speeds of convex or concave fluxes.
double godunov_scalar_flux(double qL, double qR, const ScalarFunc& f,
                           const ScalarFunc& wave_speed);

/// Second-order MUSCL-Hancock solve on rc.n_cells cells over the model
/// domain, returning only the final-time profile.
///
/// Each step limits slopes with minmod, evolves the boundary-extrapolated
/// values half a step (source carried at half weight), closes interfaces
/// with godunov_scalar_flux and finishes with a conservative update whose
/// source is evaluated on the half-step cell value. The step size is
/// recomputed every step at rc.cfl and the last step is clamped to land
/// on t_final exactly.
CellField muscl_hancock_solve(const ModelSpec& model, const ReferenceConfig& rc,
                              double t_final);

/// Samples the closed-form solution at the cell centers of grid. Throws
/// WrongModelError when the model carries no closed form.
CellField exact_advection_reaction(const ModelSpec& model, const Grid& grid, double t);

/// Comparison profile on the coarse grid: the closed form when the model
/// has one, otherwise the fine MUSCL-Hancock solve evaluated at the coarse
/// cell centers. Both branches produce point values there, so errors
/// measured against either carry the same meaning.
CellField reference_profile(const ModelSpec& model, const Grid& coarse,
                            const ReferenceConfig& rc, double t_final);

}  // namespace scalefv
