#include "hsetkit/kernels.hpp"

#include <cmath>

#include "hsetkit/error.hpp"

namespace hsetkit {

Kernel::Kernel(KernelFamily family, double scale) : family_(family), scale_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error(Errc::InvalidArgument, "kernel scale must be positive and finite");
}

double Kernel::radial(double r) const noexcept {
  const double t = r / scale_;
  switch (family_) {
    case KernelFamily::Gaussian: return std::exp(-t * t);
    case KernelFamily::InverseMultiquadric: return 1.0 / std::sqrt(1.0 + t * t);
    case KernelFamily::Matern32: {
      const double a = std::sqrt(3.0) * t;
      return (1.0 + a) * std::exp(-a);
    }
  }
  return 0.0;
}

double Kernel::operator()(std::span<const double> x, std::span<const double> y) const {
  if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "kernel arguments");
  const double r2 = squared_distance(x, y);
  if (family_ == KernelFamily::Gaussian) return std::exp(-r2 / (scale_ * scale_));
  return radial(std::sqrt(r2));
}

std::string Kernel::name() const { return std::string(to_string(family_)); }

KernelFamily parse_kernel_family(std::string_view name) {
  if (name == "gaussian") return KernelFamily::Gaussian;
  if (name == "imq" || name == "inverse-multiquadric") return KernelFamily::InverseMultiquadric;
  if (name == "matern32") return KernelFamily::Matern32;
  throw Error(Errc::InvalidArgument, "unknown kernel family '" + std::string(name) + "'");
}

std::string_view to_string(KernelFamily family) noexcept {
  switch (family) {
    case KernelFamily::Gaussian: return "gaussian";
    case KernelFamily::InverseMultiquadric: return "imq";
    case KernelFamily::Matern32: return "matern32";
  }
  return "unknown";
}

DenseMatrix kernel_matrix(const Kernel& k, const PointSet& p, const PointSet& q) {
  if (!p.empty() && !q.empty() && p.dim() != q.dim())
    throw Error(Errc::DimensionMismatch, "kernel_matrix point dimensions");
  DenseMatrix m(p.size(), q.size());
  const bool same = &p == &q || p == q;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = same ? i : 0; j < q.size(); ++j) {
      const double v = k(p[i], q[j]);
      m(i, j) = v;
      if (same) m(j, i) = v;
    }
  return m;
}

}  // namespace hsetkit
