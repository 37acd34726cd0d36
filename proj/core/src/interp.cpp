#include "hsetkit/interp.hpp"

#include <cmath>
#include <limits>

#include "hsetkit/error.hpp"

namespace hsetkit {

std::vector<double> KernelSystem::kernel_vector(std::span<const double> p) const {
  if (!centers_.empty() && p.size() != centers_.dim())
    throw Error(Errc::DimensionMismatch, "query point dimension");
  std::vector<double> k(size());
  for (std::size_t i = 0; i < size(); ++i) k[i] = kernel_(centers_[i], p);
  return k;
}

KernelSystem build_system(const Kernel& k, PointSet centers) {
  KernelSystem sys(k, std::move(centers));
  sys.fact_ = spd_factor(kernel_matrix(k, sys.centers_, sys.centers_));
  if (!sys.fact_.ok)
    throw Error(Errc::DegeneratePoints,
                "kernel matrix is not positive definite (coincident or nearly coincident centers)");
  sys.alpha_ = symmetric_inverse(sys.fact_);
  return sys;
}

Interpolant::Interpolant(Kernel k, PointSet centers, std::vector<double> coefficients)
    : kernel_(k), centers_(std::move(centers)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != centers_.size())
    throw Error(Errc::DimensionMismatch, "one coefficient per center");
}

double Interpolant::operator()(std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t j = 0; j < centers_.size(); ++j) s += coefficients_[j] * kernel_(x, centers_[j]);
  return s;
}

Interpolant interpolate(const KernelSystem& sys, std::span<const double> values) {
  if (values.size() != sys.size()) throw Error(Errc::DimensionMismatch, "one value per center");
  return {sys.kernel(), sys.centers(), spd_solve(sys.factorization(), values)};
}

// Triangular solves rather than alpha * k: the kernel matrix is badly
// conditioned and the explicit inverse loses several digits in A u - k.
std::vector<double> lagrangians_at(const KernelSystem& sys, std::span<const double> xi) {
  return spd_solve(sys.factorization(), sys.kernel_vector(xi));
}

double power_function_sq(const KernelSystem& sys, std::span<const double> xi) {
  const auto k = sys.kernel_vector(xi);
  const auto u = spd_solve(sys.factorization(), k);
  double p2 = sys.kernel()(xi, xi) - dot(u, k);
  if (p2 < 0.0 && p2 >= -kPowerClampTolerance) p2 = 0.0;
  return p2;
}

double lebesgue_function(const KernelSystem& sys, std::span<const double> xi) {
  double l = 0.0;
  for (double u : lagrangians_at(sys, xi)) l += std::abs(u);
  return l;
}

double CardinalFunction::operator()(std::span<const double> x) const {
  double v = coeff_xi * kernel(x, xi);
  for (std::size_t j = 0; j < centers.size(); ++j) v += coeff_centers[j] * kernel(x, centers[j]);
  return v;
}

CardinalFunction cardinal_g(const KernelSystem& sys, std::span<const double> xi) {
  const double p2 = power_function_sq(sys, xi);
  if (!(p2 > kDegenerateTolerance))
    throw Error(Errc::PointTooClose, "xi lies on or too close to the center set");
  CardinalFunction g{sys.kernel(), sys.centers(), Point(xi.begin(), xi.end()), 1.0 / p2, {}};
  g.coeff_centers = lagrangians_at(sys, xi);
  for (double& c : g.coeff_centers) c = -c / p2;
  return g;
}

double fill_distance(const PointSet& centers, const PointSet& grid) {
  if (centers.empty() || grid.empty()) throw Error(Errc::EmptyInput, "fill_distance of empty set");
  if (centers.dim() != grid.dim()) throw Error(Errc::DimensionMismatch, "fill_distance dims");
  double worst = 0.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < centers.size(); ++i)
      nearest = std::min(nearest, squared_distance(grid[g], centers[i]));
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst);
}

double error_zero_tolerance(std::span<const double> f_values) {
  return 1e-10 * (1.0 + max_abs(f_values));
}

ZeroSetDistance zero_set_distance(const KernelSystem& sys, const Interpolant& s, const Function& f,
                                  const RegularGrid& grid) {
  if (grid.size() == 0) throw Error(Errc::EmptyInput, "empty grid");
  const PointSet nodes = grid.points();
  std::vector<double> fvals(nodes.size());
  std::vector<double> err(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    fvals[k] = f(nodes[k]);
    err[k] = fvals[k] - s(nodes[k]);
  }
  const ZeroScan scan = scan_sign_changes(grid, err, error_zero_tolerance(fvals));

  ZeroSetDistance out;
  out.zeros_found = scan.crossings.size() + scan.zero_nodes.size();
  if (out.zeros_found == 0) {
    out.fell_back = true;
    out.value = sys.centers().empty() ? std::numeric_limits<double>::infinity()
                                      : fill_distance(sys.centers(), nodes);
    return out;
  }

  PointSet zeros(grid.dim());
  for (std::size_t i = 0; i < sys.size(); ++i) zeros.push_back(sys.centers()[i]);
  for (std::size_t k : scan.zero_nodes) zeros.push_back(nodes[k]);
  for (const auto& c : scan.crossings) zeros.push_back(c.location);
  out.value = fill_distance(zeros, nodes);
  return out;
}

}  // namespace hsetkit
