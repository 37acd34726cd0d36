#include <doctest.h>

#include <cmath>

#include "hsetkit/error.hpp"
#include "hsetkit/lp.hpp"
#include "support.hpp"

using namespace hsetkit;
using testing::near;

namespace {

LpProblem box_problem(std::vector<double> c, Sense sense, DenseMatrix a, std::vector<RowSense> rs,
                      std::vector<double> b, double lo, double hi) {
  LpProblem p;
  const std::size_t n = c.size();
  p.objective = std::move(c);
  p.sense = sense;
  p.constraints = std::move(a);
  p.row_sense = std::move(rs);
  p.rhs = std::move(b);
  p.lower.assign(n, lo);
  p.upper.assign(n, hi);
  return p;
}

double row_activity(const LpProblem& p, const std::vector<double>& x, std::size_t i) {
  return dot(p.constraints.row(i), x);
}

}  // namespace

TEST_CASE("solve_lp small cases") {
  SUBCASE("box with one binding equality") {
    const auto p = box_problem({1, 1}, Sense::Maximize, DenseMatrix::from_rows({{1, -1}}),
                               {RowSense::Equal}, {0}, 0.0, 1.0);
    const auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(near(s.objective_value, 2.0, 1e-12));
    CHECK(near(s.primal[0], 1.0, 1e-12));
    CHECK(near(s.primal[1], 1.0, 1e-12));
  }
  SUBCASE("infeasible") {
    const auto p = box_problem({1}, Sense::Maximize, DenseMatrix::from_rows({{1}}),
                               {RowSense::LessEqual}, {-1}, 0.0, kInfinity);
    CHECK(solve_lp(p).status == LpStatus::Infeasible);
  }
  SUBCASE("unbounded") {
    const auto p = box_problem({1, 0}, Sense::Maximize, DenseMatrix::from_rows({{1, -1}}),
                               {RowSense::LessEqual}, {1}, 0.0, kInfinity);
    CHECK(solve_lp(p).status == LpStatus::Unbounded);
  }
  SUBCASE("two-point Chebyshev problem") {
    // Variables (x, eta); rows -x - eta <= 0 at t=0, -e^{-1} x - eta <= -1 at t=1 and mirrors.
    const double e = std::exp(-1.0);
    LpProblem p;
    p.objective = {0, 1};
    p.constraints = DenseMatrix::from_rows({{-1, -1}, {-e, -1}, {1, -1}, {e, -1}});
    p.row_sense.assign(4, RowSense::LessEqual);
    p.rhs = {0, -1, 0, 1};
    p.lower = {-kInfinity, -kInfinity};
    p.upper = {kInfinity, kInfinity};
    const auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(near(s.objective_value, 0.73105857863000488, 1e-12));
    CHECK(near(s.primal[0], 0.73105857863000488, 1e-12));
  }
  SUBCASE("malformed input") {
    auto p = box_problem({1, 1}, Sense::Minimize, DenseMatrix::from_rows({{1, 1}}),
                         {RowSense::LessEqual}, {1}, 0.0, 1.0);
    p.lower[0] = 2.0;
    CHECK_THROWS_AS(solve_lp(p), Error);
    p.lower[0] = 0.0;
    p.rhs.push_back(1.0);
    CHECK_THROWS_AS(solve_lp(p), Error);
  }
}

TEST_CASE("check_feasible examples") {
  const auto r1 = check_feasible(DenseMatrix::from_rows({{1}, {-1}}), std::vector<double>{-1, -1});
  CHECK_FALSE(r1.feasible);
  REQUIRE(r1.certificate.size() == 2);
  CHECK(near(r1.certificate[0], 1.0, 1e-12));
  CHECK(near(r1.certificate[1], 1.0, 1e-12));

  const auto r2 = check_feasible(DenseMatrix::from_rows({{1}}), std::vector<double>{0});
  CHECK(r2.feasible);
  CHECK(r2.point[0] <= 1e-9);

  const auto r3 = check_feasible(DenseMatrix::from_rows({{1}, {2}}), std::vector<double>{-1, -1});
  CHECK(r3.feasible);
  CHECK(r3.point[0] <= -1.0 + 1e-9);
}

TEST_CASE("random bounded LPs: duality, slackness, vertices, determinism") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> sense_pick(0, 2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 30;
    const std::size_t n = 1 + (trial * 7) % 30;
    const DenseMatrix a = testing::random_matrix(gen, m, n);
    std::vector<double> x0(n);
    for (double& v : x0) v = u(gen);
    const auto ax0 = a.multiply(x0);
    std::vector<RowSense> rs(m);
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      const int k = sense_pick(gen);
      rs[i] = k == 0 ? RowSense::LessEqual : (k == 1 ? RowSense::GreaterEqual : RowSense::Equal);
      const double gap = std::abs(u(gen));
      b[i] = ax0[i] + (k == 0 ? gap : (k == 1 ? -gap : 0.0));
    }
    const Sense sense = trial % 2 ? Sense::Maximize : Sense::Minimize;
    const auto p = box_problem(testing::random_vector(gen, n), sense, a, rs, b, -2.0, 2.0);
    const auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);

    // Primal feasibility.
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(s.primal[j] >= -2.0 - 1e-9);
      CHECK(s.primal[j] <= 2.0 + 1e-9);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const double r = row_activity(p, s.primal, i);
      if (rs[i] != RowSense::GreaterEqual) CHECK(r <= b[i] + 1e-9 * (1 + std::abs(b[i])));
      if (rs[i] != RowSense::LessEqual) CHECK(r >= b[i] - 1e-9 * (1 + std::abs(b[i])));
    }

    // Dual bound b^T y + sum of reduced costs at their active bounds.
    const double c_x = dot(p.objective, s.primal);
    double dual_obj = dot(b, s.dual);
    for (std::size_t j = 0; j < n; ++j) {
      const double d = s.reduced_costs[j];
      const bool lower_active = sense == Sense::Minimize ? d > 0 : d < 0;
      dual_obj += d * (lower_active ? -2.0 : 2.0);
    }
    CHECK(near(c_x, dual_obj, 1e-7 * (1 + std::abs(c_x))));
    CHECK(near(c_x, s.objective_value, 1e-12 * (1 + std::abs(c_x))));

    // Complementary slackness and vertex property.
    std::size_t interior = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double slack = b[i] - row_activity(p, s.primal, i);
      CHECK(std::abs(s.dual[i] * slack) <= 1e-8);
      if (rs[i] != RowSense::Equal && std::abs(slack) > 1e-9) ++interior;
    }
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(s.primal[j] - 2.0) > 1e-9 && std::abs(s.primal[j] + 2.0) > 1e-9) ++interior;
    CHECK(interior <= m);

    const auto again = solve_lp(p);
    CHECK(again.primal == s.primal);
    CHECK(again.dual == s.dual);
    CHECK(again.basis == s.basis);
  }
}

TEST_CASE("Farkas dichotomy of check_feasible") {
  std::mt19937_64 gen(5);
  std::size_t feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const std::size_t rows = n + 1 + trial % 12;
    const DenseMatrix a = testing::random_matrix(gen, rows, n);
    auto b = testing::random_vector(gen, rows);
    for (double& v : b) v -= 0.5;
    const auto r = check_feasible(a, b);
    if (r.feasible) {
      ++feasible;
      CHECK(r.certificate.empty());
      const auto ax = a.multiply(r.point);
      for (std::size_t i = 0; i < rows; ++i) CHECK(ax[i] <= b[i] + 1e-9 * (1 + std::abs(b[i])));
    } else {
      ++infeasible;
      CHECK(r.point.empty());
      REQUIRE(r.certificate.size() == rows);
      for (double w : r.certificate) CHECK(w >= 0.0);
      const auto wa = a.multiply_transposed(r.certificate);
      CHECK(max_abs(wa) <= 1e-8);
      CHECK(dot(r.certificate, b) < 0.0);
    }
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}
