#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsetkit/error.hpp"
#include "hsetkit/experiment.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using namespace hsetkit;
using report::Json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitNotHSet = 2;

struct Options {
  std::string kernel = "gaussian";
  double scale = 1.0;
  std::size_t centers = 25;
  std::uint64_t seed = 1;
  std::size_t grid = 11;
  std::size_t eval_grid = 41;
  std::vector<double> mu;
  std::optional<double> multiplier_threshold;
  std::string target = "peaks";
  std::string out_dir;
  bool peaks_rescale = false;
  std::string centers_file;
  std::string points_file;
  bool expect_hset = false;
  std::size_t count = 5;
  std::string criterion = "divdiff";
  bool timings = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--kernel", o.kernel, "gaussian | imq | matern32")->capture_default_str();
  sub->add_option("--scale", o.scale, "kernel length scale")->capture_default_str();
  sub->add_option("--centers", o.centers, "number of random centers")->capture_default_str();
  sub->add_option("--seed", o.seed, "seed for the center sampler")->capture_default_str();
  sub->add_option("--grid", o.grid, "points per axis of the grid T")->capture_default_str();
  sub->add_option("--eval-grid", o.eval_grid, "points per axis of the evaluation grid")
      ->capture_default_str();
  sub->add_option("--target", o.target, "peaks, or a CSV file with x,y,value rows")
      ->capture_default_str();
  sub->add_option("--out-dir", o.out_dir, "write JSON and CSV outputs here");
  sub->add_flag("--peaks-rescale", o.peaks_rescale, "evaluate peaks on [-3,3]^2");
  sub->add_option("--centers-file", o.centers_file, "CSV with x,y center rows")
      ->check(CLI::ExistingFile);
  sub->add_flag("--timings", o.timings, "add wall-clock runtime to the report");
}

ExperimentConfig make_config(const Options& o) {
  ExperimentConfig c;
  c.kernel = Kernel(parse_kernel_family(o.kernel), o.scale);
  c.n_centers = o.centers;
  c.seed = o.seed;
  c.grid_resolution = o.grid;
  c.eval_grid_resolution = o.eval_grid;
  c.peaks_rescale = o.peaks_rescale;
  c.thresholds = o.mu;
  c.multiplier_threshold = o.multiplier_threshold;
  if (o.target != "peaks") {
    report::CsvPoints csv = report::read_points_csv(o.target);
    if (!csv.has_extra) throw Error(Errc::InvalidArgument, o.target + " needs a value column");
    c.target = TargetKind::Tabulated;
    c.table.emplace(std::move(csv.points), std::move(csv.extra));
  }
  if (!o.centers_file.empty()) c.centers = report::read_points_csv(o.centers_file).points;
  c.validate();
  return c;
}

class Output {
 public:
  explicit Output(const Options& o) : o_(o), start_(std::chrono::steady_clock::now()) {}

  void file(const std::string& name, const std::string& text) const {
    if (!o_.out_dir.empty()) report::write_file(fs::path(o_.out_dir) / name, text);
  }

  void finish(const std::string& name, Json j) const {
    if (o_.timings)
      j["runtime_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const std::string text = j.dump(2) + "\n";
    file(name, text);
    std::cout << text;
  }

 private:
  const Options& o_;
  std::chrono::steady_clock::time_point start_;
};

int run_approx(const Options& o) {
  const ExperimentConfig config = make_config(o);
  const Output out(o);
  const ApproxResult approx = cmd_approx(config);
  out.file("residuals.csv", report::residuals_csv(approx));
  out.finish("approx.json", report::approx_json(config, approx));
  return 0;
}

int run_hset_test(const Options& o) {
  const ExperimentConfig config = make_config(o);
  const Output out(o);
  bool all_certified = true;
  Json j;
  if (!o.points_file.empty()) {
    const SignedPointSet h = report::read_signed_csv(o.points_file);
    const PointSet centers = experiment_centers(config);
    const HSetCertificate cert = test_hset(kernel_hset_matrix(config.kernel, centers, h));
    all_certified = cert.is_hset;
    j = {{"config", report::to_json(config)}, {"certificate", report::to_json(cert)}};
    out.file("hset.csv", report::signed_set_csv(h, cert.weights));
  } else {
    if (o.mu.empty() && !o.multiplier_threshold)
      throw Error(Errc::InvalidArgument, "give --points, --mu or --multiplier-threshold");
    const ApproxResult approx = cmd_approx(config);
    Json list = Json::array();
    std::size_t i = 0;
    for (const Candidate& c : cmd_hset_candidates(config, approx)) {
      all_certified = all_certified && c.certificate.is_hset;
      out.file("candidate_" + std::to_string(i++) + ".csv", report::candidate_csv(c));
      list.push_back(report::to_json(c));
    }
    j = report::approx_json(config, approx);
    j["candidates"] = list;
  }
  out.finish("hset_test.json", j);
  return o.expect_hset && !all_certified ? kExitNotHSet : 0;
}

int run_reduce(const Options& o) {
  const ExperimentConfig config = make_config(o);
  const Output out(o);
  if (!o.points_file.empty()) {
    const SignedPointSet h = report::read_signed_csv(o.points_file);
    const SignedSetReduction r =
        reduce_signed_set(config.kernel, experiment_centers(config), h);
    out.file("reduced.csv", report::signed_set_csv(r.reduced, r.recertificate.weights));
    out.finish("reduce.json", {{"config", report::to_json(config)}, {"reduction", report::to_json(r)}});
    return 0;
  }
  if (o.mu.size() != 1) throw Error(Errc::InvalidArgument, "reduce needs --points or one --mu");
  const ApproxResult approx = cmd_approx(config);
  const Candidate cand = select_by_threshold(approx, config.kernel, o.mu.front());
  const ReduceReport r = cmd_reduce(approx, config.kernel, cand);
  out.file("candidate.csv", report::candidate_csv(cand));
  out.file("reduced.csv", report::candidate_csv(r.reduced));
  Json j = report::approx_json(config, approx);
  j["candidate"] = report::to_json(cand);
  j["reduction"] = report::to_json(r);
  out.finish("reduce.json", j);
  return 0;
}

int run_maps(const Options& o) {
  const ExperimentConfig config = make_config(o);
  const Output out(o);
  const MapsResult maps = cmd_maps(config);
  out.file("lagrangian_zeros.csv", report::lagrangian_zeros_csv(maps.lagrangian_zeros));
  out.file("divdiff.csv", report::divdiff_csv(maps.divdiff));
  out.file("error_zeros.csv", report::error_zeros_csv(maps.error_zeros));
  out.finish("maps.json", report::maps_json(config, maps));
  return 0;
}

int run_greedy(const Options& o) {
  const ExperimentConfig config = make_config(o);
  const Output out(o);
  GreedyCriterion crit;
  if (o.criterion == "divdiff")
    crit = GreedyCriterion::DividedDifference;
  else if (o.criterion == "error")
    crit = GreedyCriterion::InterpolationError;
  else
    throw Error(Errc::InvalidArgument, "criterion must be divdiff or error");
  const GreedyReport g = cmd_greedy(config, o.count, crit);
  out.file("greedy.csv", report::greedy_csv(g));
  out.finish("greedy.json", report::greedy_json(config, g));
  return 0;
}

int run_repro(const Options& o) {
  const ExperimentConfig config = make_config(o);
  const Output out(o);
  const ReproReport r = cmd_repro(config);
  out.file("residuals.csv", report::residuals_csv(r.approx));
  out.file("extremal.csv", report::candidate_csv(r.extremal));
  if (r.reduced_from) {
    out.file("hset.csv", report::candidate_csv(r.sweep[*r.reduced_from]));
    out.file("reduced.csv", report::candidate_csv(r.reduction->reduced));
  }
  out.finish("repro.json", report::repro_json(config, r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H-set certification, discrete Chebyshev approximation and kernel divided differences"};
  app.require_subcommand(1);
  Options o;

  auto* approx = app.add_subcommand("approx", "minimax approximation of the target on T");
  add_common(approx, o);

  auto* hset = app.add_subcommand("hset-test", "certify signed point sets");
  add_common(hset, o);
  hset->add_option("--mu", o.mu, "absolute residual thresholds");
  hset->add_option("--multiplier-threshold", o.multiplier_threshold,
                   "select points whose simplex dual weight exceeds this");
  hset->add_option("--points", o.points_file, "CSV with x,y,sign rows")->check(CLI::ExistingFile);
  hset->add_flag("--expect-hset", o.expect_hset, "exit with 2 if any verdict is negative");

  auto* reduce = app.add_subcommand("reduce", "drop zero-weight points of a certified set");
  add_common(reduce, o);
  reduce->add_option("--mu", o.mu, "residual threshold selecting the set")->expected(1);
  reduce->add_option("--points", o.points_file, "CSV with x,y,sign rows")->check(CLI::ExistingFile);

  auto* maps = app.add_subcommand("maps", "Lagrangian zeros, divided differences, error zeros");
  add_common(maps, o);

  auto* greedy = app.add_subcommand("greedy", "greedy extension of the centers from T");
  add_common(greedy, o);
  greedy->add_option("--count", o.count, "number of points to add")->capture_default_str();
  greedy->add_option("--criterion", o.criterion, "divdiff | error")->capture_default_str();

  auto* repro = app.add_subcommand("repro", "full approximation and H-set pipeline");
  add_common(repro, o);
  repro->add_option("--mu", o.mu, "extra absolute thresholds for the sweep");
  repro->add_option("--multiplier-threshold", o.multiplier_threshold,
                    "select points whose simplex dual weight exceeds this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*approx) return run_approx(o);
    if (*hset) return run_hset_test(o);
    if (*reduce) return run_reduce(o);
    if (*maps) return run_maps(o);
    if (*greedy) return run_greedy(o);
    if (*repro) return run_repro(o);
  } catch (const std::exception& e) {
    std::cerr << "hsetkit: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
