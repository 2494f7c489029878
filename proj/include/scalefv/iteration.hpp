#pragma once

#include <optional>
#include <vector>

#include "scalefv/scheme.hpp"

namespace scalefv {

/// One record per auxiliary solve: the scaling factor beta_n and, from
/// the second solve on, the increment |beta_{n-1} - beta_n| that was
/// tested against the tolerance.
struct IterationRow {
  int n = 0;
  double beta = 0.0;
  std::optional<double> e;
};

struct IterationTrace {
  std::vector<IterationRow> rows;
  /// Final-time profile of each auxiliary solve, one entry per row.
  std::vector<CellField> final_levels;
  /// Full history of the last solve performed.
  SpaceTimeField final_field;
  bool converged = false;
  int iterations_used = 0;
};

/// Largest |value| over every level of the history, level 0 included.
double sup_norm(const SpaceTimeField& w);

/// Fixed-point loop around the frozen-source solver. Starting from the
/// zero seed w0 and beta0 = 1, each pass solves the balance law with the
/// source frozen at the previous iterate, then rescales:
///
///   w_{n+1} = solve with source s(w_n(x, t)),   beta_{n+1} = 1 / ||w_{n+1}||,
///
/// where ||.|| is sup_norm. The loop stops once |beta_n - beta_{n+1}|
/// drops to cfg.tol, or gives up after cfg.max_iters solves with
/// converged = false (no exception). Every solve reuses the time grid
/// derived from the initial condition, so all iterates live on one mesh.
IterationTrace iterate(const ModelSpec& model, const Grid& grid, const RunDefaults& cfg);

/// Conventional one-pass solution: the same scheme and time grid, with
/// the source evaluated pointwise on the evolving state.
SpaceTimeField direct_solution(const ModelSpec& model, const Grid& grid,
                               const RunDefaults& cfg);

}  // namespace scalefv
