#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsetkit/kernels.hpp"
#include "hsetkit/linalg.hpp"
#include "hsetkit/points.hpp"

namespace hsetkit {

/// Threshold separating a positive maximum of 1^T w from zero.
inline constexpr double kCertificateTolerance = 1e-7;

/// Outcome of the H-set test for a signed matrix A (rows = points of H).
///
/// If is_hset, weights is a nonzero w >= 0 with w^T A = 0. Otherwise witness
/// holds x with A x <= -1, so A x < 0 entrywise.
struct HSetCertificate {
  std::vector<double> weights;
  double objective = 0.0;
  bool is_hset = false;
  std::optional<std::vector<double>> witness;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Numerical rank of A, i.e. the number of independent conditions in A^T w = 0.
  std::size_t rank = 0;
  double tolerance = kCertificateTolerance;
};

/// A_{k,i} = basis_values_{k,i} * signs_k.
DenseMatrix assemble_A(const DenseMatrix& basis_values, std::span<const int> signs);

/// Maximizes 1^T w over 0 <= w <= 1, A^T w = 0 starting from w = 0; a
/// maximum above kCertificateTolerance certifies the H-set property.
HSetCertificate test_hset(const DenseMatrix& a);

/// Entry (k, i) is K(x_i, h_k) * sigma_k.
DenseMatrix kernel_hset_matrix(const Kernel& k, const PointSet& centers, const SignedPointSet& h);

/// f(x) = sum_k w_k sigma_k K(x, h_k); vanishes on the centers it was certified for.
struct HSetFunction {
  SignedPointSet h;
  std::vector<double> weights;
  Kernel kernel;

  double operator()(std::span<const double> x) const;
};

/// Throws Errc::NotAnHSet for a negative certificate, or if the resulting
/// function fails to vanish on the centers to 1e-8.
HSetFunction kernel_hset_function(const Kernel& k, const PointSet& centers,
                                  const SignedPointSet& h, const HSetCertificate& cert);

/// Keeps the points whose certificate weight exceeds kSupportTolerance.
SignedPointSet reduce_support(const SignedPointSet& h, const HSetCertificate& cert);

/// min_k (f_k - v_k) sigma_k.
double mu_bound(std::span<const double> f_on_h, std::span<const double> v_on_h,
                std::span<const int> signs);

struct SandwichVerdict {
  bool applicable = false;
  double lower = 0.0;
  double upper = 0.0;
  /// upper / lower.
  double gap_ratio = 0.0;
  std::string reason;
};

SandwichVerdict error_sandwich(double mu, double sup_error, const HSetCertificate& cert);

}  // namespace hsetkit
