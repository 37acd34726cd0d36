#include <doctest.h>

#include <cmath>

#include "hsetkit/error.hpp"
#include "hsetkit/interp.hpp"
#include "hsetkit/kernels.hpp"
#include "support.hpp"

using namespace hsetkit;
using testing::near;

namespace {
constexpr double kInvE = 0.36787944117144232;
}

TEST_CASE("Gaussian values") {
  const Kernel g1(KernelFamily::Gaussian, 1.0);
  const std::vector<double> o{0.0, 0.0}, x{0.6, 0.8};
  CHECK(eval_kernel(g1, o, o) == 1.0);
  CHECK(near(eval_kernel(g1, o, x), kInvE, 1e-15));
  const Kernel g2(KernelFamily::Gaussian, 2.0);
  const std::vector<double> y{1.2, 1.6};
  CHECK(near(eval_kernel(g2, o, y), kInvE, 1e-15));
  CHECK_THROWS_AS(eval_kernel(g1, o, std::vector<double>{1.0}), Error);
}

TEST_CASE("kernel parameters") {
  CHECK_THROWS_AS(Kernel(KernelFamily::Gaussian, 0.0), Error);
  CHECK_THROWS_AS(Kernel(KernelFamily::Matern32, -1.0), Error);
  CHECK(parse_kernel_family("gaussian") == KernelFamily::Gaussian);
  CHECK(parse_kernel_family("imq") == KernelFamily::InverseMultiquadric);
  CHECK(parse_kernel_family("matern32") == KernelFamily::Matern32);
  CHECK_THROWS_AS(parse_kernel_family("cubic"), Error);
  for (auto fam : {KernelFamily::Gaussian, KernelFamily::InverseMultiquadric, KernelFamily::Matern32}) {
    const Kernel k(fam, 0.7);
    CHECK(k.at_zero() == 1.0);
    for (double r : {0.1, 0.5, 1.0, 3.0}) {
      CHECK(k.radial(r) > 0.0);
      CHECK(k.radial(r) < 1.0);
    }
  }
}

TEST_CASE("kernel_matrix examples") {
  const Kernel g(KernelFamily::Gaussian, 1.0);
  const auto one = testing::line({0.0});
  const auto m1 = kernel_matrix(g, one, one);
  CHECK(m1.rows() == 1);
  CHECK(m1(0, 0) == 1.0);

  const auto two = testing::line({0.0, 1.0});
  const auto m2 = kernel_matrix(g, two, two);
  CHECK(m2(0, 0) == 1.0);
  CHECK(m2(1, 1) == 1.0);
  CHECK(near(m2(0, 1), kInvE, 1e-15));
  CHECK(m2(0, 1) == m2(1, 0));

  const auto rect = kernel_matrix(g, one, two);
  CHECK(rect.rows() == 1);
  CHECK(rect.cols() == 2);
  CHECK(rect(0, 0) == 1.0);
  CHECK(near(rect(0, 1), kInvE, 1e-15));

  CHECK_THROWS_AS(kernel_matrix(g, one, PointSet::from_rows({{0.0, 0.0}})), Error);
}

TEST_CASE("kernel matrix properties over random point sets") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (auto fam : {KernelFamily::Gaussian, KernelFamily::InverseMultiquadric, KernelFamily::Matern32}) {
    const Kernel k(fam, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 20;
      const PointSet p = testing::random_points(gen, n, 2, 0.05);
      const DenseMatrix m = kernel_matrix(k, p, p);
      CHECK(m == m.transpose());
      CHECK(spd_factor(m).ok);

      const std::vector<double> t{u(gen), u(gen)};
      const double theta = u(gen);
      const double c = std::cos(theta), s = std::sin(theta);
      const auto x = p.point(0);
      const auto y = p.point(n - 1);
      const std::vector<double> xs{x[0] + t[0], x[1] + t[1]}, ys{y[0] + t[0], y[1] + t[1]};
      CHECK(near(k(xs, ys), k(x, y), 1e-14));
      const std::vector<double> xr{c * x[0] - s * x[1], s * x[0] + c * x[1]};
      const std::vector<double> yr{c * y[0] - s * y[1], s * y[0] + c * y[1]};
      CHECK(near(k(xr, yr), k(x, y), 1e-14));
      CHECK(k(x, y) == k(y, x));
    }
  }
}
