#include "hsetkit/hset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsetkit/cheb.hpp"
#include "hsetkit/error.hpp"
#include "hsetkit/lp.hpp"

namespace hsetkit {

DenseMatrix assemble_A(const DenseMatrix& basis_values, std::span<const int> signs) {
  if (signs.size() != basis_values.rows())
    throw Error(Errc::DimensionMismatch, "one sign per row of basis values");
  DenseMatrix a = basis_values;
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (double& v : a.row(k)) v *= signs[k];
  return a;
}

HSetCertificate test_hset(const DenseMatrix& a) {
  if (!a.all_finite()) throw Error(Errc::InvalidArgument, "non-finite entry in A");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  if (rows == 0) throw Error(Errc::EmptyInput, "H-set test on an empty set");

  HSetCertificate cert;
  cert.rows = rows;
  cert.cols = cols;
  cert.rank = numerical_rank(a);

  LpProblem p;
  p.objective.assign(rows, 1.0);
  p.sense = Sense::Maximize;
  p.constraints = a.transpose();
  p.row_sense.assign(cols, RowSense::Equal);
  p.rhs.assign(cols, 0.0);
  p.lower.assign(rows, 0.0);
  p.upper.assign(rows, 1.0);
  const LpSolution lp = solve_lp(p);
  if (lp.status != LpStatus::Optimal)
    throw Error(Errc::MaxIterations, "certification LP did not reach optimality");

  cert.weights = lp.primal;
  for (double& w : cert.weights) w = std::clamp(w, 0.0, 1.0);
  cert.objective = lp.objective_value;
  cert.is_hset = cert.objective > kCertificateTolerance;
  if (cert.is_hset) return cert;

  // No certificate: A x <= -1 must then be solvable.
  const std::vector<double> minus_one(rows, -1.0);
  FeasibilityResult witness = check_feasible(a, minus_one);
  if (witness.feasible) cert.witness = std::move(witness.point);
  return cert;
}

DenseMatrix kernel_hset_matrix(const Kernel& k, const PointSet& centers, const SignedPointSet& h) {
  return assemble_A(kernel_matrix(k, h.points(), centers), h.signs());
}

double HSetFunction::operator()(std::span<const double> x) const {
  double v = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k)
    v += weights[k] * h.signs()[k] * kernel(x, h.points()[k]);
  return v;
}

HSetFunction kernel_hset_function(const Kernel& k, const PointSet& centers,
                                  const SignedPointSet& h, const HSetCertificate& cert) {
  if (!cert.is_hset) throw Error(Errc::NotAnHSet, "certificate is negative");
  if (cert.weights.size() != h.size())
    throw Error(Errc::DimensionMismatch, "one certificate weight per point of H");
  HSetFunction fn{h, cert.weights, k};
  for (std::size_t i = 0; i < centers.size(); ++i)
    if (std::abs(fn(centers[i])) > 1e-8)
      throw Error(Errc::NotAnHSet, "certificate function does not vanish on the centers");
  return fn;
}

SignedPointSet reduce_support(const SignedPointSet& h, const HSetCertificate& cert) {
  if (!cert.is_hset) throw Error(Errc::NotAnHSet, "cannot reduce a negative certificate");
  if (cert.weights.size() != h.size())
    throw Error(Errc::DimensionMismatch, "one certificate weight per point of H");
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < h.size(); ++k)
    if (cert.weights[k] > kSupportTolerance) keep.push_back(k);
  return h.subset(keep);
}

double mu_bound(std::span<const double> f_on_h, std::span<const double> v_on_h,
                std::span<const int> signs) {
  if (f_on_h.size() != v_on_h.size() || f_on_h.size() != signs.size())
    throw Error(Errc::DimensionMismatch, "mu_bound inputs differ in length");
  if (signs.empty()) throw Error(Errc::EmptyInput, "mu over an empty set");
  double mu = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < signs.size(); ++k)
    mu = std::min(mu, (f_on_h[k] - v_on_h[k]) * signs[k]);
  return mu;
}

SandwichVerdict error_sandwich(double mu, double sup_error, const HSetCertificate& cert) {
  SandwichVerdict v;
  v.lower = mu;
  v.upper = sup_error;
  if (!cert.is_hset) {
    v.reason = "signed set is not an H-set";
    return v;
  }
  if (!(mu > 0.0)) {
    v.reason = "mu is not positive";
    return v;
  }
  v.applicable = true;
  v.gap_ratio = sup_error / mu;
  v.reason = "bracket valid";
  return v;
}

}  // namespace hsetkit
