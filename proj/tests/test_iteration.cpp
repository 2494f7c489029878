#include <doctest.h>

#include <cmath>

#include "scalefv/iteration.hpp"

using namespace scalefv;

TEST_CASE("sup_norm scans every level") {
  SpaceTimeField w = zero_space_time_field(3, 4, 0.1, 0.3);
  CHECK(sup_norm(w) == 0.0);
  w.levels(0, 2) = -7.0;  // level 0 participates
  w.levels(3, 1) = 5.0;
  CHECK(sup_norm(w) == doctest::Approx(7.0));
}

TEST_CASE("first iterate of the reactive transport run rescales the bump peak") {
  const ModelSpec m = model_advection_reaction();
  const Grid grid = build_grid(0.0, 1.0, 100);
  RunDefaults cfg = m.defaults;
  cfg.max_iters = 1;
  const IterationTrace trace = iterate(m, grid, cfg);
  REQUIRE(trace.rows.size() == 1);
  // The first auxiliary solve is source free, its history peaks at the
  // sampled initial bump, exp(-0.0025) at the centers nearest 0.5.
  CHECK(trace.rows[0].beta == doctest::Approx(std::exp(0.0025)).epsilon(1e-12));
  CHECK(!trace.rows[0].e.has_value());
  CHECK(!trace.converged);
}

TEST_CASE("scaling iteration converges on the three benchmark runs") {
  const Grid grid = build_grid(0.0, 1.0, 100);

  const IterationTrace adv = iterate(model_advection_reaction(), grid,
                                     model_advection_reaction().defaults);
  CHECK(adv.converged);
  CHECK(adv.iterations_used >= 14);
  CHECK(adv.iterations_used <= 16);
  CHECK(adv.rows.back().beta == doctest::Approx(0.099461).epsilon(2e-3));

  const IterationTrace burgers = iterate(model_burgers(), grid, model_burgers().defaults);
  CHECK(burgers.converged);
  CHECK(burgers.iterations_used >= 8);
  CHECK(burgers.iterations_used <= 10);
  CHECK(burgers.rows.back().beta == doctest::Approx(0.92856).epsilon(1e-2));

  const IterationTrace traffic = iterate(model_traffic(), grid, model_traffic().defaults);
  CHECK(traffic.converged);
  CHECK(traffic.iterations_used >= 8);
  CHECK(traffic.iterations_used <= 10);
  CHECK(traffic.rows[0].beta == doctest::Approx(0.454545455).epsilon(1e-6));

  for (const IterationTrace* tr : {&adv, &burgers, &traffic}) {
    // Shapes: one increment per row after the first, one profile per row.
    CHECK(tr->final_levels.size() == tr->rows.size());
    CHECK(tr->iterations_used == static_cast<int>(tr->rows.size()));
    for (std::size_t i = 0; i < tr->rows.size(); ++i) {
      CHECK(tr->rows[i].n == static_cast<int>(i) + 1);
      CHECK(tr->rows[i].e.has_value() == (i > 0));
    }
    // The last scale inverts the sup norm of the retained history.
    const double sup = sup_norm(tr->final_field);
    CHECK(tr->rows.back().beta * sup == doctest::Approx(1.0).epsilon(1e-14));
    // Increments stay positive until the one that triggers the stop and,
    // once settled, shrink monotonically.
    for (std::size_t i = 1; i + 1 < tr->rows.size(); ++i) CHECK(*tr->rows[i].e > 0.0);
    for (std::size_t i = 4; i < tr->rows.size(); ++i)
      CHECK(*tr->rows[i].e <= *tr->rows[i - 1].e);
  }
}

TEST_CASE("a source-free model stops after exactly two solves") {
  const ModelSpec inert = model_advection_reaction(1.0, 0.0);
  const Grid grid = build_grid(0.0, 1.0, 100);
  const IterationTrace trace = iterate(inert, grid, inert.defaults);
  CHECK(trace.converged);
  CHECK(trace.iterations_used == 2);
  REQUIRE(trace.rows.size() == 2);
  // Both solves see a vanishing source, so their histories coincide and
  // the second increment is exactly zero.
  CHECK(*trace.rows[1].e == 0.0);
  CHECK(trace.rows[0].beta == trace.rows[1].beta);
}

TEST_CASE("an identically zero iterate cannot be rescaled") {
  ModelSpec flat = model_advection_reaction(1.0, 0.0);
  flat.initial_condition = [](double) { return 0.0; };
  const Grid grid = build_grid(0.0, 1.0, 100);
  CHECK_THROWS_AS(iterate(flat, grid, flat.defaults), DegenerateNormError);
}

TEST_CASE("hitting the iteration cap reports no convergence without throwing") {
  const ModelSpec m = model_advection_reaction();
  const Grid grid = build_grid(0.0, 1.0, 100);
  RunDefaults cfg = m.defaults;
  cfg.max_iters = 3;
  const IterationTrace trace = iterate(m, grid, cfg);
  CHECK(!trace.converged);
  CHECK(trace.iterations_used == 3);
  CHECK(trace.rows.size() == 3);
  CHECK(trace.final_field.n_steps() > 0);
}

TEST_CASE("direct and iterated solutions share the time grid") {
  const ModelSpec m = model_burgers();
  const Grid grid = build_grid(0.0, 1.0, 100);
  const IterationTrace trace = iterate(m, grid, m.defaults);
  const SpaceTimeField direct = direct_solution(m, grid, m.defaults);
  CHECK(direct.n_steps() == trace.final_field.n_steps());
  CHECK(direct.dt == trace.final_field.dt);
}

TEST_CASE("the converged iterate lands on the direct solution") {
  const Grid grid = build_grid(0.0, 1.0, 100);
  for (const char* name : {"advection-reaction", "burgers", "traffic"}) {
    const ModelSpec m = model_by_name(name);
    const IterationTrace trace = iterate(m, grid, m.defaults);
    REQUIRE(trace.converged);
    const SpaceTimeField direct = direct_solution(m, grid, m.defaults);
    const double gap =
        (trace.final_field.final_level() - direct.final_level()).abs().maxCoeff();
    CHECK(gap <= 1e-6);
  }
}
