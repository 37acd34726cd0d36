#include "hsetkit/cheb.hpp"

#include <cmath>

#include "hsetkit/error.hpp"
#include "hsetkit/lp.hpp"

namespace hsetkit {

namespace {

std::vector<double> residuals_of(const DenseMatrix& b, std::span<const double> f,
                                 std::span<const double> x) {
  std::vector<double> r = b.multiply(x);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = f[k] - r[k];
  return r;
}

}  // namespace

ChebSolution solve_minimax(const DenseMatrix& b, std::span<const double> f) {
  const std::size_t rows = b.rows();
  const std::size_t n = b.cols();
  if (rows == 0) throw Error(Errc::EmptyInput, "minimax needs at least one point");
  if (f.size() != rows) throw Error(Errc::DimensionMismatch, "one data value per row of B");

  // Columns: x_1..x_n, eta. Rows k: -B_k x - eta <= -f_k; rows N+k: B_k x - eta <= f_k.
  LpProblem p;
  p.objective.assign(n + 1, 0.0);
  p.objective[n] = 1.0;
  p.constraints = DenseMatrix(2 * rows, n + 1);
  p.row_sense.assign(2 * rows, RowSense::LessEqual);
  p.rhs.resize(2 * rows);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      p.constraints(k, i) = -b(k, i);
      p.constraints(rows + k, i) = b(k, i);
    }
    p.constraints(k, n) = -1.0;
    p.constraints(rows + k, n) = -1.0;
    p.rhs[k] = -f[k];
    p.rhs[rows + k] = f[k];
  }
  p.lower.assign(n + 1, -kInfinity);
  p.upper.assign(n + 1, kInfinity);

  const LpSolution lp = solve_lp(p);
  if (lp.status != LpStatus::Optimal)
    throw Error(Errc::MaxIterations, "minimax LP did not reach optimality");

  ChebSolution sol;
  sol.coefficients.assign(lp.primal.begin(), lp.primal.begin() + static_cast<std::ptrdiff_t>(n));
  sol.residuals = residuals_of(b, f, sol.coefficients);
  sol.eta_star = max_abs(sol.residuals);
  sol.sigma_star.resize(rows);
  sol.dual_weights.resize(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    sol.sigma_star[k] = sign_of(sol.residuals[k]);
    // Multipliers of LessEqual rows are <= 0. Row k binds where the residual
    // is +eta, row N+k where it is -eta.
    sol.dual_weights[k] = lp.dual[rows + k] - lp.dual[k];
  }
  return sol;
}

std::vector<std::size_t> dual_support(const ChebSolution& sol) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < sol.dual_weights.size(); ++k)
    if (std::abs(sol.dual_weights[k]) > kSupportTolerance) idx.push_back(k);
  return idx;
}

SignedPointSet extract_extremal_hset(const ChebSolution& sol, const PointSet& h) {
  if (h.size() != sol.dual_weights.size())
    throw Error(Errc::DimensionMismatch, "one point per dual weight");
  if (sol.eta_star <= kSupportTolerance)
    throw Error(Errc::EmptySupport, "data is reproduced exactly; there are no extremal points");
  const auto idx = dual_support(sol);
  if (idx.empty()) throw Error(Errc::EmptySupport, "dual weights vanish");
  std::vector<int> signs;
  signs.reserve(idx.size());
  for (std::size_t k : idx) signs.push_back(sign_of(sol.dual_weights[k]));
  return {h.subset(idx), std::move(signs)};
}

bool minimax_on_subset_bound(double eta_subset, double eta_full) {
  return eta_subset <= eta_full + 1e-9;
}

std::vector<double> strict_residuals(const DenseMatrix& b, std::span<const double> f,
                                     const ChebSolution& sol) {
  const std::size_t rows = b.rows();
  const std::size_t n = b.cols();
  const auto support = dual_support(sol);
  if (support.size() == rows) return sol.residuals;

  std::vector<bool> in_support(rows, false);
  for (std::size_t k : support) in_support[k] = true;
  const double band = 1e-9 * (1.0 + sol.eta_star);

  // Columns: x_1..x_n, tau.
  LpProblem p;
  p.objective.assign(n + 1, 0.0);
  p.objective[n] = 1.0;
  p.constraints = DenseMatrix(2 * rows, n + 1);
  p.row_sense.resize(2 * rows);
  p.rhs.resize(2 * rows);
  for (std::size_t k = 0; k < rows; ++k) {
    if (in_support[k]) {
      // sigma (f_k - B_k x) stays within [eta - band, eta + band].
      const double s = sign_of(sol.dual_weights[k]);
      for (std::size_t i = 0; i < n; ++i) {
        p.constraints(k, i) = -s * b(k, i);
        p.constraints(rows + k, i) = -s * b(k, i);
      }
      p.row_sense[k] = RowSense::GreaterEqual;
      p.rhs[k] = sol.eta_star - band - s * f[k];
      p.row_sense[rows + k] = RowSense::LessEqual;
      p.rhs[rows + k] = sol.eta_star + band - s * f[k];
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        p.constraints(k, i) = -b(k, i);
        p.constraints(rows + k, i) = b(k, i);
      }
      p.constraints(k, n) = -1.0;
      p.constraints(rows + k, n) = -1.0;
      p.row_sense[k] = RowSense::LessEqual;
      p.row_sense[rows + k] = RowSense::LessEqual;
      p.rhs[k] = -f[k];
      p.rhs[rows + k] = f[k];
    }
  }
  p.lower.assign(n + 1, -kInfinity);
  p.upper.assign(n + 1, kInfinity);
  p.lower[n] = 0.0;

  const LpSolution lp = solve_lp(p);
  if (lp.status != LpStatus::Optimal) return sol.residuals;
  const std::span<const double> x(lp.primal.data(), n);
  return residuals_of(b, f, x);
}

}  // namespace hsetkit
