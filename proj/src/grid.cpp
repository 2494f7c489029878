#include "scalefv/grid.hpp"

#include <cmath>

namespace scalefv {

Grid build_grid(double a, double b, int n_cells) {
  if (!(b > a)) throw InvalidDomainError("build_grid: need b > a");
  if (n_cells < 2) throw InvalidDomainError("build_grid: need at least 2 cells");
  Grid g;
  g.a = a;
  g.b = b;
  g.n_cells = n_cells;
  g.dx = (b - a) / n_cells;
  g.centers = a + (Eigen::ArrayXd::LinSpaced(n_cells, 0.0, n_cells - 1.0) + 0.5) * g.dx;
  return g;
}

Eigen::ArrayXd extend_with_ghosts(const CellField& field, BoundaryKind bc, int n_ghost) {
  const Eigen::Index n = field.size();
  if (n_ghost < 1 || n_ghost > 2)
    throw std::invalid_argument("extend_with_ghosts: ghost width must be 1 or 2");
  if (n < n_ghost)
    throw std::invalid_argument("extend_with_ghosts: field shorter than ghost width");
  Eigen::ArrayXd ext(n + 2 * n_ghost);
  ext.segment(n_ghost, n) = field;
  switch (bc) {
    case BoundaryKind::Periodic:
      ext.head(n_ghost) = field.tail(n_ghost);
      ext.tail(n_ghost) = field.head(n_ghost);
      break;
    case BoundaryKind::Transmissive:
      ext.head(n_ghost).setConstant(field[0]);
      ext.tail(n_ghost).setConstant(field[n - 1]);
      break;
  }
  return ext;
}

CellField restrict_field(const CellField& fine, const Grid& fine_grid,
                         const Grid& coarse_grid) {
  const double span = fine_grid.b - fine_grid.a;
  if (std::abs(fine_grid.a - coarse_grid.a) > 1e-12 * span ||
      std::abs(fine_grid.b - coarse_grid.b) > 1e-12 * span)
    throw IncompatibleGridsError("restrict_field: grids cover different domains");
  if (fine.size() != fine_grid.n_cells)
    throw LengthMismatchError("restrict_field: field length does not match the fine grid");
  if (fine_grid.n_cells % coarse_grid.n_cells != 0)
    throw IncompatibleGridsError(
        "restrict_field: fine cell count is not a multiple of the coarse one");
  const int k = fine_grid.n_cells / coarse_grid.n_cells;
  CellField coarse(coarse_grid.n_cells);
  for (int i = 0; i < coarse_grid.n_cells; ++i)
    coarse[i] = fine.segment(static_cast<Eigen::Index>(i) * k, k).mean();
  return coarse;
}

CellField interpolate_at_centers(const CellField& field, const Grid& from, const Grid& to) {
  const double span = from.b - from.a;
  if (std::abs(from.a - to.a) > 1e-12 * span || std::abs(from.b - to.b) > 1e-12 * span)
    throw IncompatibleGridsError("interpolate_at_centers: grids cover different domains");
  if (field.size() != from.n_cells)
    throw LengthMismatchError(
        "interpolate_at_centers: field length does not match the source grid");
  CellField out(to.n_cells);
  for (int i = 0; i < to.n_cells; ++i) {
    const double s = (to.centers[i] - from.a) / from.dx - 0.5;
    if (s <= 0.0) {
      out[i] = field[0];
    } else if (s >= from.n_cells - 1.0) {
      out[i] = field[from.n_cells - 1];
    } else {
      const int lo = static_cast<int>(std::floor(s));
      const double t = s - lo;
      out[i] = (1.0 - t) * field[lo] + t * field[lo + 1];
    }
  }
  return out;
}

CellField sample_at_centers(const ScalarFunc& fn, const Grid& grid) {
  return grid.centers.unaryExpr(fn);
}

SpaceTimeField zero_space_time_field(int n_steps, int n_cells, double dt, double t_final) {
  SpaceTimeField w;
  w.levels = Eigen::ArrayXXd::Zero(n_steps + 1, n_cells);
  w.dt = dt;
  w.t_final = t_final;
  return w;
}

}  // namespace scalefv
