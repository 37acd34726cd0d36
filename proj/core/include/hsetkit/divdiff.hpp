#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hsetkit/grid.hpp"
#include "hsetkit/interp.hpp"
#include "hsetkit/points.hpp"

namespace hsetkit {

/// |u_i(xi)| at or below this counts as a vanishing Lagrangian.
inline constexpr double kLagrangianZeroTolerance = 1e-9;
inline constexpr double kExtremalTolerance = 1e-7;

/// Kernel divided difference on T = X + {xi}: the unique dual weight vector
/// of discrete Chebyshev approximation from V_X on T, in closed form,
/// normalized so that the weight at xi is positive.
struct DividedDifference {
  Point xi;
  double weight_at_xi = 0.0;
  std::vector<double> weights_at_centers;
  /// (f(xi) - s_{X,f}(xi)) / (1 + L_X(xi)).
  double value = 0.0;
  double eta_star = 0.0;
  std::vector<std::size_t> degenerate_indices;
  std::vector<double> lagrangians;
  double lebesgue = 0.0;
};

/// Throws Errc::PointTooClose when P_X^2(xi) <= kDegenerateTolerance.
DividedDifference divided_difference(const KernelSystem& sys, const Function& f,
                                     std::span<const double> xi);

/// Optimal discrete minimax error on X + {xi}.
inline double eta_star_identity(const DividedDifference& dd) { return dd.eta_star; }

/// Basis values K(t_k, x_i) on T = X + {xi}, xi last, and f on T.
struct AugmentedProblem {
  PointSet points;
  DenseMatrix basis_values;
  std::vector<double> f_values;
};
AugmentedProblem augmented_problem(const KernelSystem& sys, const Function& f,
                                   std::span<const double> xi);

struct EquioscillationReport {
  double eta_closed_form = 0.0;
  double eta_lp = 0.0;
  /// Residuals of the strict best approximation on X + {xi}; xi last.
  std::vector<double> residuals;
  std::vector<bool> extremal;
  std::size_t extremal_count = 0;
  std::size_t point_count = 0;
  std::vector<std::size_t> degenerate_indices;
  /// Points of T where the error is not extremal.
  std::size_t degeneration = 0;
};

/// Recomputes the best approximation on X + {xi} by LP and counts the points
/// attaining |residual| = eta* within kExtremalTolerance.
EquioscillationReport equioscillation_check(const KernelSystem& sys, const Function& f,
                                            std::span<const double> xi);

/// {xi with +1} together with every center whose Lagrangian does not vanish
/// at xi, signed -sign(u_i(xi)) as in the dual weights.
SignedPointSet hset_from_point(const KernelSystem& sys, std::span<const double> xi);

struct LagrangianCrossing {
  std::size_t center = 0;
  Point location;
};

/// Sign changes of every Lagrangian u_j along the grid edges.
std::vector<LagrangianCrossing> lagrangian_zero_map(const KernelSystem& sys,
                                                    const RegularGrid& grid);

struct MapNode {
  Point location;
  /// Empty where xi is too close to X.
  std::optional<double> value;
};

std::vector<MapNode> divdiff_map(const KernelSystem& sys, const Function& f,
                                 const RegularGrid& grid);

struct ErrorZeroMap {
  std::vector<Point> crossings;
  std::vector<Point> zero_nodes;
  std::vector<Point> centers;
  /// f - s vanishes at every grid node.
  bool identically_zero = false;
};

ErrorZeroMap error_zero_map(const KernelSystem& sys, const Function& f, const RegularGrid& grid);

enum class GreedyCriterion { DividedDifference, InterpolationError };

struct GreedyStep {
  std::size_t candidate = 0;
  Point point;
  double score = 0.0;
};

/// Adds, one at a time, the candidate maximizing |f - s_{X,f}| / (1 + L_X)
/// (or |f - s_{X,f}| for InterpolationError), rebuilding the system after
/// each step. Ties go to the lowest candidate index; candidates too close to
/// the current centers are skipped. Throws Errc::ExhaustedCandidates when
/// fewer than `count` candidates remain usable.
std::vector<GreedyStep> greedy_select(const KernelSystem& sys, const Function& f,
                                      const PointSet& candidates, std::size_t count,
                                      GreedyCriterion criterion = GreedyCriterion::DividedDifference);

}  // namespace hsetkit
