#pragma once

#include <span>
#include <vector>

#include "hsetkit/linalg.hpp"
#include "hsetkit/points.hpp"

namespace hsetkit {

/// Dual weights with |w_k| at or below this are treated as zero.
inline constexpr double kSupportTolerance = 1e-9;

/// Best discrete Chebyshev approximation of data f_H by the columns of B,
/// together with the dual weights of the final simplex basis.
struct ChebSolution {
  std::vector<double> coefficients;
  double eta_star = 0.0;
  /// f_H - B x*.
  std::vector<double> residuals;
  std::vector<int> sigma_star;
  /// w* with B^T w* = 0, ||w*||_1 = 1, f_H^T w* = eta_star.
  std::vector<double> dual_weights;
};

/// Solves  min eta  s.t.  -B x - eta <= -f,  B x - eta <= f  with the
/// simplex engine; the dual weights are the row multipliers of that run.
ChebSolution solve_minimax(const DenseMatrix& b, std::span<const double> f);

/// Indices k with |w*_k| > kSupportTolerance.
std::vector<std::size_t> dual_support(const ChebSolution& sol);

/// Support of the dual weights with signs sign(w*_k). Throws
/// Errc::EmptySupport when eta_star is zero.
SignedPointSet extract_extremal_hset(const ChebSolution& sol, const PointSet& h);

/// eta on a subset can never exceed eta on the full set.
bool minimax_on_subset_bound(double eta_subset, double eta_full);

/// Residuals of the strict best approximation: points in the dual support keep
/// their extremal residuals (within a small band), and the largest residual
/// over the remaining points is minimized in a second LP. Equal to
/// sol.residuals when the support covers every point.
std::vector<double> strict_residuals(const DenseMatrix& b, std::span<const double> f,
                                     const ChebSolution& sol);

}  // namespace hsetkit
