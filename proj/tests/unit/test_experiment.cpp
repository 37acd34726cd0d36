#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "hsetkit/error.hpp"
#include "hsetkit/experiment.hpp"
#include "report.hpp"
#include "support.hpp"

using namespace hsetkit;
using testing::near;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Io;
}

ExperimentConfig small_config(std::uint64_t seed = 1) {
  ExperimentConfig c;
  c.n_centers = 8;
  c.seed = seed;
  c.grid_resolution = 9;
  c.eval_grid_resolution = 17;
  return c;
}

}  // namespace

TEST_CASE("peaks") {
  CHECK(near(peaks(0.0, 0.0), 0.98101184312384619, 1e-15));
  CHECK(near(peaks(0.5, -0.25), 0.47556523646642954, 1e-15));
  CHECK(near(peaks(-1.0, 1.0), 0.22889945007177015, 1e-15));

  ExperimentConfig c;
  c.peaks_rescale = true;
  const auto f = make_target(c);
  CHECK(near(f(std::vector<double>{1.0 / 3.0, -1.0 / 3.0}), peaks(1.0, -1.0), 1e-15));
}

TEST_CASE("tabulated targets") {
  const TabulatedFunction t(PointSet::from_rows({{0.0, 0.0}, {1.0, 0.5}}), {2.0, 3.0});
  CHECK(t(std::vector<double>{1.0, 0.5}) == 3.0);
  CHECK(code_of([&] { t(std::vector<double>{0.5, 0.5}); }) == Errc::InvalidArgument);
  CHECK(code_of([] { TabulatedFunction(PointSet::from_rows({{0.0, 0.0}}), {}); }) ==
        Errc::DimensionMismatch);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(ExperimentConfig{}.validate());
  auto bad = [](auto edit) {
    ExperimentConfig c;
    edit(c);
    return code_of([&] { c.validate(); });
  };
  CHECK(bad([](ExperimentConfig& c) { c.grid_resolution = 1; }) == Errc::InvalidArgument);
  CHECK(bad([](ExperimentConfig& c) { c.n_centers = 0; }) == Errc::InvalidArgument);
  CHECK(bad([](ExperimentConfig& c) { c.thresholds = {-0.1}; }) == Errc::InvalidArgument);
  CHECK(bad([](ExperimentConfig& c) { c.multiplier_threshold = -1.0; }) == Errc::InvalidArgument);
  CHECK(bad([](ExperimentConfig& c) { c.target = TargetKind::Tabulated; }) ==
        Errc::InvalidArgument);
  CHECK(bad([](ExperimentConfig& c) { c.centers = testing::line({0.0}); }) ==
        Errc::DimensionMismatch);
}

TEST_CASE("seeded centers") {
  const Box box = Box::cube(2, -1.0, 1.0);
  const auto a = sample_centers(25, box, 7);
  CHECK(a == sample_centers(25, box, 7));
  CHECK_FALSE(a == sample_centers(25, box, 8));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (double v : a[i]) CHECK((v >= -1.0 && v < 1.0));

  ExperimentConfig c;
  c.centers = PointSet::from_rows({{0.0, 0.0}, {0.0, 0.0}});
  CHECK(code_of([&] { experiment_centers(c); }) == Errc::DegeneratePoints);
}

TEST_CASE("approximation") {
  SUBCASE("centers on every grid node reproduce the target") {
    ExperimentConfig c;
    c.grid_resolution = 3;
    c.eval_grid_resolution = 3;
    c.centers = RegularGrid::square(-1.0, 1.0, 3).points();
    const auto a = cmd_approx(c);
    CHECK(a.eta_star_on_grid <= 1e-8);
  }
  SUBCASE("evaluation grid equal to T") {
    auto c = small_config();
    c.eval_grid_resolution = c.grid_resolution;
    const auto a = cmd_approx(c);
    CHECK(near(a.sup_error_on_eval_grid, a.eta_star_on_grid, 1e-12));
  }
  SUBCASE("sup error dominates eta*") {
    const auto a = cmd_approx(small_config());
    CHECK(a.eta_star_on_grid > 0.0);
    CHECK(a.sup_error_on_eval_grid >= a.eta_star_on_grid - 1e-12);
    CHECK(a.grid_points.size() == 81);
    const auto v = approximant_values(a, small_config().kernel, a.grid_points);
    for (std::size_t k = 0; k < v.size(); ++k)
      CHECK(near(a.f_values[k] - v[k], a.solution.residuals[k], 1e-10));
  }
}

TEST_CASE("candidate selection, sandwich and reduction") {
  const auto config = small_config(3);
  const auto a = cmd_approx(config);
  const Kernel& k = config.kernel;

  CHECK(select_by_threshold(a, k, 0.0).indices.size() == a.grid_points.size());
  CHECK(code_of([&] { select_by_threshold(a, k, 2.0 * a.eta_star_on_grid); }) ==
        Errc::EmptySelection);

  const auto top = select_top(a, k, 5);
  CHECK(top.indices.size() == 5);
  CHECK(std::is_sorted(top.indices.begin(), top.indices.end()));

  std::size_t certified = 0;
  for (double frac : repro_threshold_fractions()) {
    const auto c = select_by_threshold(a, k, frac * a.eta_star_on_grid);
    for (std::size_t i : c.indices)
      CHECK(std::abs(a.solution.residuals[i]) >= frac * a.eta_star_on_grid);
    if (!c.certificate.is_hset) {
      CHECK_FALSE(c.sandwich.applicable);
      CHECK(code_of([&] { cmd_reduce(a, k, c); }) == Errc::NotAnHSet);
      continue;
    }
    ++certified;
    if (c.mu > 0.0) {
      REQUIRE(c.sandwich.applicable);
      CHECK(c.mu <= a.eta_star_on_grid + 1e-8);
      CHECK(a.eta_star_on_grid <= a.sup_error_on_eval_grid + 1e-8);
    }
    const auto r = cmd_reduce(a, k, c);
    CHECK(r.recertified);
    CHECK(r.size_after <= r.size_before);
    CHECK(r.mu_after >= r.mu_before - 1e-15);
  }
  CHECK(certified > 0);

  const auto m = select_by_multiplier(a, k, 1e-5);
  CHECK(m.indices == dual_support(a.solution));
  CHECK(m.certificate.is_hset);
}

TEST_CASE("repro pipeline") {
  auto config = small_config(2);
  config.thresholds = {0.0};
  const auto r = cmd_repro(config);
  CHECK(r.extremal.indices.size() == config.n_centers);
  REQUIRE_FALSE(r.sweep.empty());
  for (std::size_t i = 1; i < r.sweep.size(); ++i)
    CHECK(r.sweep[i].threshold <= r.sweep[i - 1].threshold);
  REQUIRE(r.reduced_from);
  CHECK(r.sweep[*r.reduced_from].certificate.is_hset);
  for (std::size_t i = *r.reduced_from + 1; i < r.sweep.size(); ++i)
    CHECK_FALSE(r.sweep[i].certificate.is_hset);
  REQUIRE(r.reduction);
  CHECK(r.reduction->recertified);

  const auto again = cmd_repro(config);
  CHECK(again.approx.solution.residuals == r.approx.solution.residuals);
  CHECK(again.reduction->reduced.indices == r.reduction->reduced.indices);
}

TEST_CASE("maps and greedy commands") {
  auto config = small_config();
  config.eval_grid_resolution = 11;
  const auto maps = cmd_maps(config);
  CHECK(maps.divdiff.size() == 121);
  CHECK(maps.error_zeros.centers.size() == config.n_centers);
  CHECK(maps.fill_distance > 0.0);
  CHECK(near(maps.grid_spacing, 0.2, 1e-15));

  const auto g = cmd_greedy(config, 3, GreedyCriterion::DividedDifference);
  CHECK(g.steps.size() == 3);
  CHECK(g.sup_error_after.size() == 4);
  const auto e = cmd_greedy(config, 3, GreedyCriterion::InterpolationError);
  CHECK(e.criterion == GreedyCriterion::InterpolationError);
  CHECK(cmd_greedy(config, 0, GreedyCriterion::DividedDifference).steps.empty());
}

TEST_CASE("CSV round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "hsetkit_csv_test";
  const SignedPointSet h(PointSet::from_rows({{0.1, -0.2}, {1.0 / 3.0, 0.7}}), {1, -1});
  report::write_file(dir / "h.csv", report::signed_set_csv(h, {0.5, 1.0}));
  const auto back = report::read_signed_csv(dir / "h.csv");
  CHECK(testing::same_points(back.points(), h.points()));
  CHECK(back.signs() == h.signs());

  report::write_file(dir / "bad.csv", "x,y,sign\n0,0,2\n");
  CHECK(code_of([&] { report::read_signed_csv(dir / "bad.csv"); }) == Errc::InvalidArgument);
  report::write_file(dir / "ragged.csv", "0,0\n1,1,1\n");
  CHECK(code_of([&] { report::read_points_csv(dir / "ragged.csv"); }) == Errc::Io);
  CHECK(code_of([&] { report::read_points_csv(dir / "missing.csv"); }) == Errc::Io);
  std::filesystem::remove_all(dir);
}
