#pragma once

#include <Eigen/Core>
#include <functional>

#include "scalefv/errors.hpp"

namespace scalefv {

/// Cell values of one time level, one entry per cell.
using CellField = Eigen::ArrayXd;

/// Pointwise scalar map, used for fluxes, sources and initial data.
using ScalarFunc = std::function<double(double)>;

enum class BoundaryKind { Periodic, Transmissive };

/// Uniform 1D mesh of cell averages over [a, b].
struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n_cells = 0;
  double dx = 0.0;
  Eigen::ArrayXd centers;
};

/// Builds a uniform grid. Requires b > a and n_cells >= 2.
Grid build_grid(double a, double b, int n_cells);

/// Pads a field with n_ghost cells per side (n_ghost is 1 or 2).
/// Periodic ghosts wrap the opposite end, transmissive ghosts copy the
/// nearest interior value. The interior block is returned unchanged.
Eigen::ArrayXd extend_with_ghosts(const CellField& field, BoundaryKind bc, int n_ghost);

/// Averages blocks of fine cells onto a coarser grid covering the same
/// domain. The fine cell count must be an integer multiple of the coarse
/// one; block means keep the discrete integral intact.
CellField restrict_field(const CellField& fine, const Grid& fine_grid, const Grid& coarse_grid);

/// Evaluates a cell-center field on another grid's centers over the same
/// domain, interpolating linearly between adjacent source centers and
/// clamping to the end values beyond the outermost ones. Unlike
/// restrict_field this needs no divisibility between the cell counts and
/// preserves point values instead of block averages.
CellField interpolate_at_centers(const CellField& field, const Grid& from, const Grid& to);

/// Evaluates fn at every cell center.
CellField sample_at_centers(const ScalarFunc& fn, const Grid& grid);

/// Complete history of one solve: row m of levels holds the cell values
/// at time m * dt, so there are n_steps + 1 rows in total.
struct SpaceTimeField {
  Eigen::ArrayXXd levels;
  double dt = 0.0;
  double t_final = 0.0;

  int n_steps() const { return static_cast<int>(levels.rows()) - 1; }
  int n_cells() const { return static_cast<int>(levels.cols()); }
  double time(int m) const { return m * dt; }
  CellField level(int m) const { return levels.row(m).transpose(); }
  CellField final_level() const { return level(n_steps()); }
};

/// All-zero history with the given shape.
SpaceTimeField zero_space_time_field(int n_steps, int n_cells, double dt, double t_final);

}  // namespace scalefv
