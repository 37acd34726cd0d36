#include <doctest.h>

#include <cmath>

#include "hsetkit/error.hpp"
#include "hsetkit/linalg.hpp"
#include "support.hpp"

using namespace hsetkit;
using testing::near;

TEST_CASE("spd_factor small cases") {
  SUBCASE("identity") {
    const auto f = spd_factor(DenseMatrix::identity(2));
    CHECK(f.ok);
    CHECK(f.factor == DenseMatrix::identity(2));
  }
  SUBCASE("hand Cholesky of [[4,2],[2,3]]") {
    const auto f = spd_factor(DenseMatrix::from_rows({{4, 2}, {2, 3}}));
    REQUIRE(f.ok);
    CHECK(near(f.factor(0, 0), 2.0, 1e-15));
    CHECK(near(f.factor(0, 1), 0.0, 0.0));
    CHECK(near(f.factor(1, 0), 1.0, 1e-15));
    CHECK(near(f.factor(1, 1), 1.41421356237309505, 1e-15));
  }
  SUBCASE("rank one matrix is not positive definite") {
    CHECK_FALSE(spd_factor(DenseMatrix::from_rows({{1, 1}, {1, 1}})).ok);
  }
  SUBCASE("asymmetry is rejected") {
    CHECK_THROWS_AS(spd_factor(DenseMatrix::from_rows({{1, 0.5}, {0.4, 1}})), Error);
    try {
      spd_factor(DenseMatrix::from_rows({{1, 0.5}, {0.4, 1}}));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotSymmetric);
    }
  }
  SUBCASE("non-square") {
    CHECK_THROWS_AS(spd_factor(DenseMatrix(2, 3)), Error);
  }
}

TEST_CASE("spd_solve") {
  CHECK(spd_solve(spd_factor(DenseMatrix::identity(2)), std::vector<double>{3, 7}) ==
        std::vector<double>{3, 7});
  const auto x = spd_solve(spd_factor(DenseMatrix::from_rows({{4, 2}, {2, 3}})),
                           std::vector<double>{6, 5});
  CHECK(near(x[0], 1.0, 1e-14));
  CHECK(near(x[1], 1.0, 1e-14));
  const auto h = spd_solve(spd_factor(DenseMatrix::from_rows({{2}})), std::vector<double>{1});
  CHECK(near(h[0], 0.5, 1e-15));
  try {
    spd_solve(spd_factor(DenseMatrix::identity(2)), std::vector<double>{1, 2, 3});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("symmetric_inverse") {
  CHECK(symmetric_inverse(spd_factor(DenseMatrix::identity(3))) == DenseMatrix::identity(3));
  const auto d = symmetric_inverse(spd_factor(DenseMatrix::from_rows({{2, 0}, {0, 4}})));
  CHECK(near(d(0, 0), 0.5, 1e-16));
  CHECK(near(d(1, 1), 0.25, 1e-16));
  CHECK(d(0, 1) == 0.0);
  const auto inv = symmetric_inverse(spd_factor(DenseMatrix::from_rows({{4, 2}, {2, 3}})));
  CHECK(near(inv(0, 0), 3.0 / 8, 1e-15));
  CHECK(near(inv(0, 1), -2.0 / 8, 1e-15));
  CHECK(near(inv(1, 0), -2.0 / 8, 1e-15));
  CHECK(near(inv(1, 1), 4.0 / 8, 1e-15));
}

TEST_CASE("random SPD matrices: reconstruct, solve, invert") {
  std::mt19937_64 gen(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 30;
    const DenseMatrix a = testing::random_matrix(gen, n, n);
    DenseMatrix m = a.transpose().multiply(a);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += 1.0;
    // Symmetrize exactly; the product is symmetric up to rounding only.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) m(j, i) = m(i, j);

    const auto f = spd_factor(m);
    REQUIRE(f.ok);
    const DenseMatrix llt = f.factor.multiply(f.factor.transpose());
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) diff += std::pow(llt(i, j) - m(i, j), 2);
    CHECK(std::sqrt(diff) <= 1e-10 * m.frobenius_norm());

    const auto rhs = testing::random_vector(gen, n);
    const auto x = spd_solve(f, rhs);
    const auto mx = m.multiply(x);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(mx[i] - rhs[i]));
    CHECK(res <= 1e-9 * (1.0 + max_abs(rhs)));

    const DenseMatrix inv = symmetric_inverse(f);
    CHECK(inv.asymmetry() == 0.0);
    const DenseMatrix prod = inv.multiply(m);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dev = std::max(dev, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
    CHECK(dev <= 1e-8);
  }
}

TEST_CASE("numerical_rank") {
  CHECK(numerical_rank(DenseMatrix::identity(4)) == 4);
  CHECK(numerical_rank(DenseMatrix::from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
  CHECK(numerical_rank(DenseMatrix(3, 2)) == 0);
}
