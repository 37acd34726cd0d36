#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hsetkit/grid.hpp"
#include "hsetkit/kernels.hpp"
#include "hsetkit/linalg.hpp"
#include "hsetkit/points.hpp"

namespace hsetkit {

using Function = std::function<double(std::span<const double>)>;

/// P_X^2 at or below this value means "xi coincides with a center".
inline constexpr double kDegenerateTolerance = 1e-10;
inline constexpr double kPowerClampTolerance = 1e-12;

/// Kernel plus centers X, with the factored kernel matrix and its inverse
/// (alpha). Immutable once built; every query is a pure function.
class KernelSystem {
 public:
  const Kernel& kernel() const noexcept { return kernel_; }
  const PointSet& centers() const noexcept { return centers_; }
  const SpdFactorization& factorization() const noexcept { return fact_; }
  const DenseMatrix& alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return centers_.size(); }

  /// (K(x_1, p), ..., K(x_n, p)).
  std::vector<double> kernel_vector(std::span<const double> p) const;

 private:
  friend KernelSystem build_system(const Kernel& k, PointSet centers);
  KernelSystem(Kernel k, PointSet centers) : kernel_(k), centers_(std::move(centers)) {}

  Kernel kernel_;
  PointSet centers_;
  SpdFactorization fact_;
  DenseMatrix alpha_;
};

/// Throws Errc::DegeneratePoints when the kernel matrix is not numerically
/// positive definite (coincident centers).
KernelSystem build_system(const Kernel& k, PointSet centers);

/// s(x) = sum_j c_j K(x, x_j).
class Interpolant {
 public:
  Interpolant(Kernel k, PointSet centers, std::vector<double> coefficients);

  double operator()(std::span<const double> x) const;
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  const PointSet& centers() const noexcept { return centers_; }

 private:
  Kernel kernel_;
  PointSet centers_;
  std::vector<double> coefficients_;
};

Interpolant interpolate(const KernelSystem& sys, std::span<const double> values);

/// Values u_{x_i}(xi) of the Lagrange basis, u_i = sum_j alpha_ij K(xi, x_j).
std::vector<double> lagrangians_at(const KernelSystem& sys, std::span<const double> xi);

/// Squared power function K(xi,xi) - sum_i u_i(xi) K(x_i, xi), clamped to 0
/// when it falls less than kPowerClampTolerance below zero.
double power_function_sq(const KernelSystem& sys, std::span<const double> xi);

/// L_X(xi) = sum_j |u_j(xi)|.
double lebesgue_function(const KernelSystem& sys, std::span<const double> xi);

/// The function in span{K(., xi), K(., x_1), ...} that vanishes on X and is
/// one at xi.
struct CardinalFunction {
  Kernel kernel;
  PointSet centers;
  Point xi;
  double coeff_xi = 0.0;
  std::vector<double> coeff_centers;

  double operator()(std::span<const double> x) const;
};

/// Throws Errc::PointTooClose if P_X^2(xi) <= kDegenerateTolerance.
CardinalFunction cardinal_g(const KernelSystem& sys, std::span<const double> xi);

/// max over grid of the distance to the nearest point of X.
double fill_distance(const PointSet& centers, const PointSet& grid);

struct ZeroSetDistance {
  double value = 0.0;
  /// Estimated zeros of f - s found on grid edges or nodes.
  std::size_t zeros_found = 0;
  /// True when f - s has no zero on the grid and fill_distance was used.
  bool fell_back = false;
};

/// Grid estimate of sup_y inf{ |x - y| : f(x) = s(x) }. The zero set is the
/// union of X, grid nodes where f - s vanishes, and linear-interpolated
/// sign changes along grid edges.
ZeroSetDistance zero_set_distance(const KernelSystem& sys, const Interpolant& s, const Function& f,
                                  const RegularGrid& grid);

/// Tolerance under which f - s counts as zero at a node, relative to the data.
double error_zero_tolerance(std::span<const double> f_values);

}  // namespace hsetkit
