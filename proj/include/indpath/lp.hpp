#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Shared tolerances. Model coefficients are small integers, so fixed
// absolute tolerances are adequate.
inline constexpr double kFeasTol = 1e-6;   // bound/row feasibility
inline constexpr double kDualTol = 1e-7;   // reduced-cost threshold
inline constexpr double kDropTol = 1e-12;  // coefficients treated as zero

enum class Relation { less_equal, equal, greater_equal };

struct Row {
  std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
  Relation rel = Relation::less_equal;
  double rhs = 0.0;
};

/// Sparse maximization LP with per-variable bounds. Rows appended later keep
/// earlier row indices valid.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Row> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_variable(double obj, double lo, double hi);
  void append_row(Row row);  // validates variable indices and coefficients
};

enum class SolveStatus { optimal, infeasible, iteration_limit };

/// Warm-start state: one basic column per row (structural or slack index),
/// plus the bound side of every nonbasic column. A stale or infeasible basis
/// falls back to a cold start inside lp_solve.
struct Basis {
  std::vector<int> basic;
  std::vector<std::uint8_t> at_upper;
  bool empty() const { return basic.empty(); }
};

struct LpSolution {
  SolveStatus status = SolveStatus::iteration_limit;
  std::vector<double> primal;  // structural variables
  double objective_value = 0.0;
  long pivots = 0;
  Basis basis;  // populated when optimal
};

struct SolveOptions {
  long max_pivots = 0;                // 0: default of 50*(num_vars+num_rows)
  double time_limit_seconds = 0.0;    // 0: none; expiry yields iteration_limit
};

LpSolution lp_solve(const LinearProgram& lp, const Basis* warm = nullptr,
                    const SolveOptions& options = {});

// Returns the program with the rows appended (indices of existing rows are
// preserved; a previous basis remains usable as a warm start if it is still
// feasible).
LinearProgram lp_add_rows(LinearProgram lp, const std::vector<Row>& rows);

// Debug dump in LP text format for external cross-checking.
void write_lp_text(const LinearProgram& lp, std::ostream& out);

}  // namespace indpath::lp
