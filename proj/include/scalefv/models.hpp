#pragma once

#include <string>

#include "scalefv/grid.hpp"

namespace scalefv {

/// Every registered model is posed on the unit interval.
inline constexpr double model_domain_a = 0.0;
inline constexpr double model_domain_b = 1.0;

/// Settings a model carries as its canonical run configuration.
struct RunDefaults {
  int n_cells = 100;
  double cfl = 0.5;
  double alpha = 1.0;
  double t_final = 0.1;
  double tol = 1e-7;
  int max_iters = 100;
  int reference_cells = 1000;
};

/// Throws std::invalid_argument naming the first field out of bounds.
void validate(const RunDefaults& cfg);

/// A scalar balance law  d/dt q + d/dx f(q) = s(q)  together with its
/// initial data, boundary treatment and run defaults. exact_solution is
/// empty unless a closed form is known; it maps (x, t) to the state.
struct ModelSpec {
  std::string name;
  ScalarFunc flux;
  ScalarFunc wave_speed;
  ScalarFunc source;
  ScalarFunc initial_condition;
  BoundaryKind bc = BoundaryKind::Periodic;
  std::function<double(double, double)> exact_solution;
  RunDefaults defaults;
};

/// Linear transport with a linear reaction term:
///   f(q) = lambda q,  s(q) = r q,  u0 a narrow Gaussian bump, periodic.
/// The closed-form solution advects the bump and scales it by exp(r t).
ModelSpec model_advection_reaction(double lambda = 1.0, double r = 10.0);

/// Burgers flux with a quartic source:
///   f(q) = q^2 / 2,  s(q) = q^4,  u0 = sin(2 pi x)^4, periodic.
ModelSpec model_burgers();

/// Traffic flow with a cubic source:
///   f(q) = q u_max (1 - q / q_max),  s(q) = r q^3, transmissive.
/// The initial profile blends plateaus 2.2 (left) and 0.2 (right) through
/// a smoothed sign function of width sqrt(delta) around x = 0.5.
ModelSpec model_traffic(double r = 2.0, double u_max = 3.0, double q_max = 0.8,
                        double delta = 1e-6);

/// Lookup by CLI name: "advection-reaction", "burgers" or "traffic".
ModelSpec model_by_name(const std::string& name);

enum class Convexity { Convex, Concave, Indefinite };

/// Numerical screening of the structural assumptions a model is expected
/// to satisfy. Purely informative; nothing here gates a solve.
struct HypothesisReport {
  bool source_vanishes_at_zero = false;
  double lipschitz_estimate = 0.0;
  Convexity flux_convexity = Convexity::Indefinite;
  bool flux_origin_conditions = false;
};

/// Samples n_samples points of [q_min, q_max]. Convexity is classified
/// from central differences of the wave speed, the Lipschitz estimate is
/// the largest sampled |s'(q)|, and the origin checks test s(0) = 0 and
/// f(0) = f'(0) = 0 to 1e-12.
HypothesisReport check_hypotheses(const ModelSpec& model, double q_min, double q_max,
                                  int n_samples);

}  // namespace scalefv
