#include <doctest.h>

#include <cmath>

#include "scalefv/models.hpp"

using namespace scalefv;

TEST_CASE("advection-reaction model pieces") {
  const ModelSpec m = model_advection_reaction();
  CHECK(m.flux(2.0) == doctest::Approx(2.0));
  CHECK(m.wave_speed(123.0) == 1.0);
  CHECK(m.source(0.5) == doctest::Approx(5.0));
  CHECK(m.source(0.0) == 0.0);
  CHECK(m.initial_condition(0.5) == doctest::Approx(1.0));
  CHECK(m.initial_condition(0.495) ==
        doctest::Approx(std::exp(-0.0025)).epsilon(1e-14));
  CHECK(m.bc == BoundaryKind::Periodic);
  CHECK(m.defaults.cfl == doctest::Approx(0.18));
  CHECK(m.defaults.alpha == doctest::Approx(5.6));
}

TEST_CASE("advection-reaction closed form advects and scales the bump") {
  const ModelSpec m = model_advection_reaction();
  REQUIRE(bool(m.exact_solution));
  // After a quarter period the peak has moved from 0.5 to 0.75.
  CHECK(m.exact_solution(0.75, 0.25) ==
        doctest::Approx(std::exp(2.5)).epsilon(1e-13));
  // Wrap-around: a probe left of the shift lands near the right edge.
  CHECK(m.exact_solution(0.1, 0.25) ==
        doctest::Approx(std::exp(-100.0 * 0.35 * 0.35) * std::exp(2.5)).epsilon(1e-12));
  // At t = 0 the closed form reproduces the initial condition exactly.
  for (double x : {0.005, 0.25, 0.495, 0.75, 0.995})
    CHECK(std::abs(m.exact_solution(x, 0.0) - m.initial_condition(x)) <= 1e-15);
}

TEST_CASE("burgers model pieces") {
  const ModelSpec m = model_burgers();
  CHECK(m.flux(2.0) == doctest::Approx(2.0));
  CHECK(m.wave_speed(2.0) == doctest::Approx(2.0));
  CHECK(m.source(2.0) == doctest::Approx(16.0));
  CHECK(m.source(0.0) == 0.0);
  CHECK(m.initial_condition(0.25) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.initial_condition(0.5) == doctest::Approx(0.0));
  CHECK(!m.exact_solution);
  CHECK(m.defaults.alpha == doctest::Approx(2.55));
  CHECK(m.defaults.t_final == doctest::Approx(0.12));
}

TEST_CASE("traffic model pieces") {
  const ModelSpec m = model_traffic();
  CHECK(m.flux(0.4) == doctest::Approx(0.6));  // 0.4 * 3 * (1 - 0.5)
  CHECK(m.wave_speed(0.4) == doctest::Approx(0.0));
  CHECK(m.wave_speed(0.2) == doctest::Approx(1.5));
  CHECK(m.wave_speed(2.2) == doctest::Approx(-13.5));
  CHECK(m.source(0.5) == doctest::Approx(0.25));
  CHECK(m.source(0.0) == 0.0);
  CHECK(m.bc == BoundaryKind::Transmissive);
  CHECK(m.defaults.t_final == doctest::Approx(0.02));

  // Smoothed plateaus: 2.2 on the left, 0.2 on the right, midpoint exact.
  CHECK(m.initial_condition(0.0) == doctest::Approx(2.2).epsilon(1e-5));
  CHECK(m.initial_condition(1.0) == doctest::Approx(0.2).epsilon(1e-4));
  CHECK(m.initial_condition(0.5) == doctest::Approx(1.2));
  for (double x = 0.0; x <= 1.0; x += 0.01) {
    const double v = m.initial_condition(x);
    CHECK(v >= 0.2 - 1e-9);
    CHECK(v <= 2.2 + 1e-9);
  }

  CHECK_THROWS_AS(model_traffic(2.0, -1.0, 0.8, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(model_traffic(2.0, 3.0, 0.8, 0.0), std::invalid_argument);
}

TEST_CASE("wave speed matches the flux derivative") {
  for (const ModelSpec& m :
       {model_advection_reaction(), model_burgers(), model_traffic()}) {
    const double h = 1e-5;
    for (double q = -3.0; q <= 3.0; q += 0.05) {
      const double fd = (m.flux(q + h) - m.flux(q - h)) / (2.0 * h);
      CHECK(std::abs(fd - m.wave_speed(q)) <= 1e-6);
    }
  }
}

TEST_CASE("model lookup by name") {
  CHECK(model_by_name("advection-reaction").name == "advection-reaction");
  CHECK(model_by_name("burgers").name == "burgers");
  CHECK(model_by_name("traffic").name == "traffic");
  CHECK_THROWS_AS(model_by_name("nosuch"), UnknownModelError);
}

TEST_CASE("run defaults validation") {
  RunDefaults cfg = model_burgers().defaults;
  CHECK_NOTHROW(validate(cfg));
  cfg.cfl = 5.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = model_burgers().defaults;
  cfg.alpha = 0.5;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = model_burgers().defaults;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("hypothesis screening classifies the registered models") {
  const HypothesisReport burgers = check_hypotheses(model_burgers(), -1.1, 1.1, 401);
  CHECK(burgers.flux_convexity == Convexity::Convex);
  CHECK(burgers.source_vanishes_at_zero);
  CHECK(burgers.flux_origin_conditions);
  // Largest |s'| on [-1.1, 1.1] for s = q^4 is 4 * 1.1^3.
  CHECK(burgers.lipschitz_estimate == doctest::Approx(5.324).epsilon(1e-7));

  const HypothesisReport traffic = check_hypotheses(model_traffic(), -1.0, 1.0, 401);
  CHECK(traffic.flux_convexity == Convexity::Concave);
  CHECK(traffic.source_vanishes_at_zero);
  CHECK(!traffic.flux_origin_conditions);

  const HypothesisReport adv = check_hypotheses(model_advection_reaction(), -1.0, 1.0, 101);
  CHECK(adv.flux_convexity == Convexity::Indefinite);
  CHECK(adv.source_vanishes_at_zero);
  CHECK(!adv.flux_origin_conditions);

  CHECK_THROWS_AS(check_hypotheses(model_burgers(), 1.0, -1.0, 101), std::invalid_argument);
  CHECK_THROWS_AS(check_hypotheses(model_burgers(), -1.0, 1.0, 2), std::invalid_argument);
}
