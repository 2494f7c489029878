#pragma once

#include "scalefv/grid.hpp"
#include "scalefv/models.hpp"

namespace scalefv {

/// Mesh ratios shared by the flux formulas. The dissipation knob alpha
/// must be at least 1; alpha = 1 recovers the classic FORCE flux and
/// larger values reduce the Lax-Friedrichs part of the dissipation.
struct SchemeParams {
  double cfl = 1.0;
  double alpha = 1.0;
  double dx = 0.0;
  double dt = 0.0;
};

/// Lax-Friedrichs flux with rescaled dissipation:
///   F = (f(qL) + f(qR)) / 2 - dx / (2 alpha dt) * (qR - qL).
double lf_alpha_flux(double qL, double qR, const ScalarFunc& f, const SchemeParams& p);

/// Lax-Wendroff flux built from the rescaled midpoint state
///   q* = (qL + qR) / 2 - alpha dt / (2 dx) * (f(qR) - f(qL)),
/// returning f(q*).
double lw_alpha_flux(double qL, double qR, const ScalarFunc& f, const SchemeParams& p);

/// Arithmetic mean of the two fluxes above.
double force_alpha_flux(double qL, double qR, const ScalarFunc& f, const SchemeParams& p);

/// Largest stable step for the given cell values: cfl * dx / max |wave
/// speed|. Throws DegenerateSpeedError when the largest sampled speed
/// falls below 1e-12.
double compute_dt(const CellField& field, const ModelSpec& model, double cfl, double dx);

/// One forward-Euler finite-volume update with pointwise source values:
///   q_i' = q_i - dt/dx (F_{i+1/2} - F_{i-1/2}) + dt S_i,
/// where F is the FORCE flux above on a one-ghost extension of prev.
CellField step(const CellField& prev, const Eigen::ArrayXd& source_values,
               const ModelSpec& model, const SchemeParams& p, BoundaryKind bc);

/// Chooses where the source is evaluated during a solve. Direct mode
/// feeds the evolving state back into s. Frozen mode reads level n of a
/// fixed space-time field instead, so the source is a known function of
/// space and time and the solve is linear in the unknown whenever f is.
class SourceMode {
 public:
  static SourceMode direct() { return SourceMode{nullptr}; }
  static SourceMode frozen(const SpaceTimeField& payload) { return SourceMode{&payload}; }

  /// Null for direct mode. The payload must outlive the solve.
  const SpaceTimeField* payload() const { return payload_; }

 private:
  explicit SourceMode(const SpaceTimeField* payload) : payload_(payload) {}
  const SpaceTimeField* payload_ = nullptr;
};

/// Marches n_steps explicit steps of size dt from the sampled initial
/// condition and records every level. A frozen payload must share the
/// grid, the step count and dt. A NaN or Inf state aborts the solve with
/// a diagnostic naming the offending step.
SpaceTimeField solve(const ModelSpec& model, const Grid& grid, int n_steps, double dt,
                     double alpha, const SourceMode& mode);

/// Time grid every solve of one experiment shares: dt comes from the
/// initial condition once, is rounded so the horizon is hit exactly, and
/// is never adapted afterwards.
struct TimeGrid {
  double dt = 0.0;
  int n_steps = 0;
};

TimeGrid shared_time_grid(const ModelSpec& model, const Grid& grid, double cfl,
                          double t_final);

}  // namespace scalefv
