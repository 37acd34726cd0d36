#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hsetkit {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  DenseMatrix transpose() const;
  std::vector<double> multiply(std::span<const double> x) const;
  /// Computes this^T * y.
  std::vector<double> multiply_transposed(std::span<const double> y) const;
  DenseMatrix multiply(const DenseMatrix& other) const;

  bool all_finite() const noexcept;
  double frobenius_norm() const noexcept;
  /// Largest absolute difference m(i,j) - m(j,i); requires a square matrix.
  double asymmetry() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Lower-triangular Cholesky factor. `ok` is false when a pivot falls at or
/// below the pivot tolerance; the factor is then incomplete and must not be
/// used for solves.
struct SpdFactorization {
  std::size_t dimension = 0;
  DenseMatrix factor;
  bool ok = false;
};

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPivotTolerance = 1e-12;

/// Throws Errc::NotSymmetric if m is not symmetric to kSymmetryTolerance.
SpdFactorization spd_factor(const DenseMatrix& m);

std::vector<double> spd_solve(const SpdFactorization& fact, std::span<const double> rhs);

/// Full inverse of the factored matrix, symmetrized.
DenseMatrix symmetric_inverse(const SpdFactorization& fact);

/// Numerical rank by Gaussian elimination with complete pivoting; pivots
/// below rel_tol * max|entry| count as zero.
std::size_t numerical_rank(const DenseMatrix& m, double rel_tol = 1e-10);

double max_abs(std::span<const double> v) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace hsetkit
