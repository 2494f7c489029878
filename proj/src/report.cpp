#include "scalefv/report.hpp"

#include <cstdio>
#include <ostream>

namespace scalefv {

namespace {

std::string sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string full(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double l1_error(const CellField& a, const CellField& b, double dx) {
  if (a.size() != b.size())
    throw LengthMismatchError("l1_error: fields have different lengths");
  if (!(dx > 0.0)) throw std::invalid_argument("l1_error: dx must be positive");
  return dx * (a - b).abs().sum();
}

double gaining(double err_k, double err_direct) {
  if (err_direct == 0.0)
    throw ZeroDirectError("gaining: direct error vanishes, ratio undefined");
  return err_k / err_direct;
}

ConvergenceTable build_table(const IterationTrace& trace,
                             const std::vector<CellField>& per_iter_finals,
                             const CellField& reference, const CellField& direct,
                             const Grid& grid, const std::string& model_name,
                             const RunDefaults& settings) {
  if (trace.rows.size() != per_iter_finals.size())
    throw LengthMismatchError("build_table: trace rows and iterate profiles disagree");
  ConvergenceTable table;
  table.model_name = model_name;
  table.settings = settings;
  table.err_direct = l1_error(direct, reference, grid.dx);
  table.rows.reserve(trace.rows.size());
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const double err = l1_error(per_iter_finals[i], reference, grid.dx);
    table.rows.push_back({trace.rows[i].n, trace.rows[i].beta, err,
                          gaining(err, table.err_direct)});
  }
  return table;
}

void emit_csv(const ConvergenceTable& table, std::ostream& out) {
  out << "n,beta,err,tau\n";
  for (const ConvergenceRow& row : table.rows)
    out << row.n << ',' << sig9(row.beta) << ',' << sig9(row.err) << ',' << sig9(row.tau)
        << '\n';
  if (!out) throw IoError("emit_csv: write failed");
}

void emit_profile_csv(const Grid& grid, const CellField& q, std::ostream& out) {
  if (q.size() != grid.n_cells)
    throw LengthMismatchError("emit_profile_csv: field does not match the grid");
  out << "x,q\n";
  for (int i = 0; i < grid.n_cells; ++i)
    out << full(grid.centers[i]) << ',' << full(q[i]) << '\n';
  if (!out) throw IoError("emit_profile_csv: write failed");
}

}  // namespace scalefv
