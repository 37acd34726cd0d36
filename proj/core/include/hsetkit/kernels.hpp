#pragma once

#include <span>
#include <string>
#include <string_view>

#include "hsetkit/linalg.hpp"
#include "hsetkit/points.hpp"

namespace hsetkit {

enum class KernelFamily { Gaussian, InverseMultiquadric, Matern32 };

/// Radial, symmetric, strictly positive definite kernel with length scale s.
///
///   Gaussian             exp(-r^2 / s^2)
///   InverseMultiquadric  1 / sqrt(1 + r^2 / s^2)
///   Matern32             (1 + sqrt(3) r / s) exp(-sqrt(3) r / s)
///
/// All three take the value 1 at r = 0.
class Kernel {
 public:
  explicit Kernel(KernelFamily family = KernelFamily::Gaussian, double scale = 1.0);

  KernelFamily family() const noexcept { return family_; }
  double scale() const noexcept { return scale_; }

  double operator()(std::span<const double> x, std::span<const double> y) const;
  double radial(double r) const noexcept;
  double at_zero() const noexcept { return radial(0.0); }

  std::string name() const;

 private:
  KernelFamily family_;
  double scale_;
};

KernelFamily parse_kernel_family(std::string_view name);
std::string_view to_string(KernelFamily family) noexcept;

inline double eval_kernel(const Kernel& k, std::span<const double> x, std::span<const double> y) {
  return k(x, y);
}

/// Entry (i, j) is k(p_i, q_j).
DenseMatrix kernel_matrix(const Kernel& k, const PointSet& p, const PointSet& q);

}  // namespace hsetkit
