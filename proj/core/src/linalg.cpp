#include "hsetkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hsetkit/error.hpp"

namespace hsetkit {

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  DenseMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::DimensionMismatch, "ragged row list");
    std::copy(row.begin(), row.end(), m.row(i).begin());
    ++i;
  }
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector product");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
  return y;
}

std::vector<double> DenseMatrix::multiply_transposed(std::span<const double> y) const {
  if (y.size() != rows_) throw Error(Errc::DimensionMismatch, "transposed product");
  std::vector<double> x(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) x[j] += r[j] * y[i];
  }
  return x;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
  if (cols_ != other.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
  DenseMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool DenseMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double DenseMatrix::frobenius_norm() const noexcept {
  return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
}

double DenseMatrix::asymmetry() const {
  if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "asymmetry of non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

SpdFactorization spd_factor(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "spd_factor needs a square matrix");
  if (!m.all_finite()) throw Error(Errc::InvalidArgument, "non-finite matrix entry");
  if (m.asymmetry() > kSymmetryTolerance)
    throw Error(Errc::NotSymmetric, "asymmetry exceeds tolerance");

  const std::size_t n = m.rows();
  SpdFactorization out{n, DenseMatrix(n, n), true};
  DenseMatrix& l = out.factor;
  for (std::size_t j = 0; j < n; ++j) {
    double diag = m(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > kPivotTolerance)) {
      out.ok = false;
      return out;
    }
    const double pivot = std::sqrt(diag);
    l(j, j) = pivot;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / pivot;
    }
  }
  return out;
}

namespace {

void require_ok(const SpdFactorization& fact) {
  if (!fact.ok) throw Error(Errc::InvalidArgument, "factorization is not positive definite");
}

// Solves L L^T x = b in place.
void cholesky_substitute(const DenseMatrix& l, std::span<double> x) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x[k];
    x[i] = s / l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * x[k];
    x[i] = s / l(i, i);
  }
}

}  // namespace

std::vector<double> spd_solve(const SpdFactorization& fact, std::span<const double> rhs) {
  require_ok(fact);
  if (rhs.size() != fact.dimension) throw Error(Errc::DimensionMismatch, "spd_solve rhs length");
  std::vector<double> x(rhs.begin(), rhs.end());
  cholesky_substitute(fact.factor, x);
  return x;
}

DenseMatrix symmetric_inverse(const SpdFactorization& fact) {
  require_ok(fact);
  const std::size_t n = fact.dimension;
  DenseMatrix inv(n, n);
  std::vector<double> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), 0.0);
    col[j] = 1.0;
    cholesky_substitute(fact.factor, col);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = avg;
      inv(j, i) = avg;
    }
  return inv;
}

std::size_t numerical_rank(const DenseMatrix& m, double rel_tol) {
  DenseMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const double scale = max_abs(a.data());
  if (scale == 0.0) return 0;
  const double tol = rel_tol * scale;

  std::vector<std::size_t> col_perm(cols);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  std::size_t rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    std::size_t pr = rank, pc = rank;
    double best = 0.0;
    for (std::size_t i = rank; i < rows; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pr = i;
          pc = j;
        }
    if (best <= tol) break;
    if (pr != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pr, j), a(rank, j));
    if (pc != rank)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, pc), a(i, rank));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const double f = a(i, rank) / a(rank, rank);
      if (f == 0.0) continue;
      for (std::size_t j = rank; j < cols; ++j) a(i, j) -= f * a(rank, j);
    }
  }
  return rank;
}

double max_abs(std::span<const double> v) noexcept {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hsetkit
