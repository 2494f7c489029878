#include "scalefv/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace scalefv {

void validate(const RunDefaults& cfg) {
  if (cfg.n_cells < 2) throw std::invalid_argument("n_cells must be at least 2");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(cfg.alpha >= 1.0)) throw std::invalid_argument("alpha must be at least 1");
  if (!(cfg.t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (cfg.reference_cells < 2) throw std::invalid_argument("ref_cells must be at least 2");
}

ModelSpec model_advection_reaction(double lambda, double r) {
  auto u0 = [](double x) { return std::exp(-100.0 * (x - 0.5) * (x - 0.5)); };
  ModelSpec m;
  m.name = "advection-reaction";
  m.flux = [lambda](double q) { return lambda * q; };
  m.wave_speed = [lambda](double) { return lambda; };
  m.source = [r](double q) { return r * q; };
  m.initial_condition = u0;
  m.bc = BoundaryKind::Periodic;
  m.exact_solution = [lambda, r, u0](double x, double t) {
    double y = x - lambda * t;
    y -= std::floor(y);  // wrap into [0, 1)
    return u0(y) * std::exp(r * t);
  };
  m.defaults = {.n_cells = 100,
                .cfl = 0.18,
                .alpha = 5.6,
                .t_final = 0.25,
                .tol = 1e-7,
                .max_iters = 100,
                .reference_cells = 1000};
  return m;
}

ModelSpec model_burgers() {
  ModelSpec m;
  m.name = "burgers";
  m.flux = [](double q) { return 0.5 * q * q; };
  m.wave_speed = [](double q) { return q; };
  m.source = [](double q) { return q * q * q * q; };
  m.initial_condition = [](double x) {
    const double s = std::sin(2.0 * std::numbers::pi * x);
    return s * s * s * s;
  };
  m.bc = BoundaryKind::Periodic;
  m.defaults = {.n_cells = 100,
                .cfl = 0.5,
                .alpha = 2.55,
                .t_final = 0.12,
                .tol = 1e-7,
                .max_iters = 100,
                .reference_cells = 1000};
  return m;
}

ModelSpec model_traffic(double r, double u_max, double q_max, double delta) {
  if (!(u_max > 0.0) || !(q_max > 0.0))
    throw std::invalid_argument("model_traffic: u_max and q_max must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("model_traffic: delta must be positive");
  ModelSpec m;
  m.name = "traffic";
  m.flux = [u_max, q_max](double q) { return q * u_max * (1.0 - q / q_max); };
  m.wave_speed = [u_max, q_max](double q) { return u_max * (1.0 - 2.0 * q / q_max); };
  m.source = [r](double q) { return r * q * q * q; };
  m.initial_condition = [delta](double x) {
    const double d = x - 0.5;
    const double c = d / std::sqrt(d * d + delta);
    return 0.2 * 0.5 * (1.0 + c) + 2.2 * 0.5 * (1.0 - c);
  };
  m.bc = BoundaryKind::Transmissive;
  m.defaults = {.n_cells = 100,
                .cfl = 0.5,
                .alpha = 2.0,
                .t_final = 0.02,
                .tol = 1e-7,
                .max_iters = 100,
                .reference_cells = 1000};
  return m;
}

ModelSpec model_by_name(const std::string& name) {
  if (name == "advection-reaction") return model_advection_reaction();
  if (name == "burgers") return model_burgers();
  if (name == "traffic") return model_traffic();
  throw UnknownModelError("unknown model '" + name +
                          "' (choose advection-reaction, burgers or traffic)");
}

HypothesisReport check_hypotheses(const ModelSpec& model, double q_min, double q_max,
                                  int n_samples) {
  if (!(q_max > q_min)) throw std::invalid_argument("check_hypotheses: need q_max > q_min");
  if (n_samples < 3) throw std::invalid_argument("check_hypotheses: need at least 3 samples");

  const double h = 1e-5;
  const Eigen::ArrayXd q = Eigen::ArrayXd::LinSpaced(n_samples, q_min, q_max);

  double min_curv = std::numeric_limits<double>::infinity();
  double max_curv = -std::numeric_limits<double>::infinity();
  double lipschitz = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const double curv = (model.wave_speed(q[i] + h) - model.wave_speed(q[i] - h)) / (2.0 * h);
    min_curv = std::min(min_curv, curv);
    max_curv = std::max(max_curv, curv);
    lipschitz = std::max(
        lipschitz, std::abs((model.source(q[i] + h) - model.source(q[i] - h)) / (2.0 * h)));
  }

  HypothesisReport rep;
  rep.lipschitz_estimate = lipschitz;
  if (min_curv > 1e-10)
    rep.flux_convexity = Convexity::Convex;
  else if (max_curv < -1e-10)
    rep.flux_convexity = Convexity::Concave;
  else
    rep.flux_convexity = Convexity::Indefinite;
  rep.source_vanishes_at_zero = std::abs(model.source(0.0)) <= 1e-12;
  rep.flux_origin_conditions =
      std::abs(model.flux(0.0)) <= 1e-12 && std::abs(model.wave_speed(0.0)) <= 1e-12;
  return rep;
}

}  // namespace scalefv
