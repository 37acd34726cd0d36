#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "hsetkit/linalg.hpp"

namespace hsetkit {

enum class Sense { Minimize, Maximize };
enum class RowSense { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kOptimalityTolerance = 1e-9;

/// Dense LP:  optimize c^T x  s.t.  row_i(A) x {<=,>=,=} b_i,  lower <= x <= upper.
struct LpProblem {
  std::vector<double> objective;
  Sense sense = Sense::Minimize;
  DenseMatrix constraints;
  std::vector<RowSense> row_sense;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_rows() const noexcept { return constraints.rows(); }
  std::size_t num_cols() const noexcept { return constraints.cols(); }

  /// Throws Errc::DimensionMismatch / Errc::InvalidArgument on malformed input.
  void validate() const;
};

/// Result of a simplex run.
///
/// For Optimal solutions, dual[i] is the multiplier of row i in the sense of
/// d(objective)/d(rhs_i) at the final basis, and reduced_costs[j] is
/// c_j - dual^T A_j. For Infeasible problems, dual holds the phase-one
/// multipliers y: they satisfy y^T A_j = 0 on free columns, y_i <= 0 on
/// LessEqual rows, y_i >= 0 on GreaterEqual rows, and y^T b > 0, which is a
/// Farkas certificate of infeasibility when all columns are free.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> primal;
  std::vector<double> dual;
  std::vector<double> reduced_costs;
  double objective_value = 0.0;
  /// Indices of basic variables: structurals 0..n-1, slack of row i is n+i,
  /// artificials follow.
  std::vector<std::size_t> basis;
  std::size_t iterations = 0;
  /// Rows minus the equality rows found redundant after phase one.
  std::size_t row_rank = 0;
};

/// Bounded-variable primal simplex with two phases, Dantzig pricing and a
/// Harris ratio test. Pricing switches to Bland's smallest-index rule after a
/// streak of degenerate pivots; ties in degenerate ratio tests are broken
/// lexicographically. Throws Errc::MaxIterations after 50 * (rows + cols)
/// pivots.
LpSolution solve_lp(const LpProblem& problem);

struct FeasibilityResult {
  bool feasible = false;
  /// x with A x <= b + tol, when feasible.
  std::vector<double> point;
  /// w >= 0 with w^T A = 0 and w^T b < 0 (scaled to max entry 1), otherwise.
  std::vector<double> certificate;
};

/// Decides solvability of A x <= b over free x, returning either a solution
/// or a Farkas certificate.
FeasibilityResult check_feasible(const DenseMatrix& a, std::span<const double> b);

}  // namespace hsetkit
