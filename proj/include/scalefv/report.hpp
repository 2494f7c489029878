#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scalefv/iteration.hpp"

namespace scalefv {

/// Discrete L1 distance dx * sum |a_i - b_i|.
double l1_error(const CellField& a, const CellField& b, double dx);

/// Error ratio err_k / err_direct. Throws ZeroDirectError when the
/// denominator vanishes.
double gaining(double err_k, double err_direct);

struct ConvergenceRow {
  int n = 0;
  double beta = 0.0;
  double err = 0.0;
  double tau = 0.0;
};

struct ConvergenceTable {
  std::string model_name;
  RunDefaults settings;
  double err_direct = 0.0;
  std::vector<ConvergenceRow> rows;
};

/// Scores every iterate against one comparison profile. Row n carries
/// beta_n from the trace, the L1 error of that iterate's final level and
/// the gaining ratio against the direct solution's error.
ConvergenceTable build_table(const IterationTrace& trace,
                             const std::vector<CellField>& per_iter_finals,
                             const CellField& reference, const CellField& direct,
                             const Grid& grid, const std::string& model_name,
                             const RunDefaults& settings);

/// Writes "n,beta,err,tau" plus one line per row, values at 9 significant
/// digits. Output is deterministic byte for byte.
void emit_csv(const ConvergenceTable& table, std::ostream& out);

/// Writes "x,q" plus one line per cell at full precision.
void emit_profile_csv(const Grid& grid, const CellField& q, std::ostream& out);

}  // namespace scalefv
