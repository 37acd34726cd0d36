#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsetkit/cheb.hpp"
#include "hsetkit/divdiff.hpp"
#include "hsetkit/grid.hpp"
#include "hsetkit/hset.hpp"
#include "hsetkit/interp.hpp"
#include "hsetkit/kernels.hpp"

namespace hsetkit {

/// Classical three-bump test surface, evaluated at (x, y) as given.
double peaks(double x, double y) noexcept;

/// Function known only at listed points; evaluation elsewhere throws.
class TabulatedFunction {
 public:
  TabulatedFunction(PointSet points, std::vector<double> values);
  double operator()(std::span<const double> p) const;
  const PointSet& points() const noexcept { return points_; }

 private:
  PointSet points_;
  std::vector<double> values_;
};

enum class TargetKind { Peaks, Tabulated };

struct ExperimentConfig {
  Kernel kernel{KernelFamily::Gaussian, 1.0};
  std::size_t n_centers = 25;
  std::uint64_t seed = 1;
  Box domain = Box::cube(2, -1.0, 1.0);
  std::size_t grid_resolution = 11;
  std::size_t eval_grid_resolution = 41;
  TargetKind target = TargetKind::Peaks;
  /// Evaluate peaks at 3 * (x, y), i.e. map [-1,1]^2 onto [-3,3]^2.
  bool peaks_rescale = false;
  std::optional<TabulatedFunction> table;
  /// Replaces the seeded random centers when set.
  std::optional<PointSet> centers;
  /// Absolute selection thresholds on |residual|.
  std::vector<double> thresholds;
  std::optional<double> multiplier_threshold;

  /// Throws Errc::InvalidArgument when a field is out of range.
  void validate() const;
};

/// Uniform samples in the box from a seeded 64-bit Mersenne Twister, using
/// the top 53 bits of each draw.
PointSet sample_centers(std::size_t count, const Box& box, std::uint64_t seed);

Function make_target(const ExperimentConfig& config);
PointSet experiment_centers(const ExperimentConfig& config);

struct ApproxResult {
  PointSet centers;
  RegularGrid grid;
  PointSet grid_points;
  RegularGrid eval_grid;
  /// K(t_k, x_i) on the grid T.
  DenseMatrix basis_values;
  std::vector<double> f_values;
  ChebSolution solution;
  double eta_star_on_grid = 0.0;
  /// Max error of the minimax approximant over the evaluation grid and T.
  double sup_error_on_eval_grid = 0.0;
};

/// Minimax approximation of the target on T by kernel translates. Throws
/// Errc::DegeneratePoints if the centers (nearly) coincide.
ApproxResult cmd_approx(const ExperimentConfig& config);

/// Values of the minimax approximant at arbitrary points.
std::vector<double> approximant_values(const ApproxResult& approx, const Kernel& kernel,
                                       const PointSet& points);

struct Candidate {
  std::string rule;
  double threshold = 0.0;
  /// Indices into the grid T.
  std::vector<std::size_t> indices;
  SignedPointSet set;
  HSetCertificate certificate;
  double mu = 0.0;
  SandwichVerdict sandwich;
};

/// Certifies the points T[indices] with residual signs and computes mu.
Candidate evaluate_candidate(const ApproxResult& approx, const Kernel& kernel,
                             std::vector<std::size_t> indices, std::string rule, double threshold);

/// Points with |residual| >= mu. Throws Errc::EmptySelection if none qualify.
Candidate select_by_threshold(const ApproxResult& approx, const Kernel& kernel, double mu);
/// The `count` points of largest |residual| (ties by index).
Candidate select_top(const ApproxResult& approx, const Kernel& kernel, std::size_t count);
/// Points whose minimax dual weight exceeds the threshold in magnitude.
Candidate select_by_multiplier(const ApproxResult& approx, const Kernel& kernel, double threshold);

/// One candidate per configured threshold, plus the multiplier rule when set.
std::vector<Candidate> cmd_hset_candidates(const ExperimentConfig& config,
                                           const ApproxResult& approx);

struct ReduceReport {
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  double mu_before = 0.0;
  double mu_after = 0.0;
  double max_residual = 0.0;
  bool recertified = false;
  Candidate reduced;
};

/// Drops zero-weight points of a certified candidate and recertifies.
/// Throws Errc::NotAnHSet for an uncertified candidate.
ReduceReport cmd_reduce(const ApproxResult& approx, const Kernel& kernel, const Candidate& cand);

struct SignedSetReduction {
  HSetCertificate certificate;
  SignedPointSet reduced;
  HSetCertificate recertificate;
};

/// Certification and support reduction for an externally supplied signed set.
SignedSetReduction reduce_signed_set(const Kernel& kernel, const PointSet& centers,
                                     const SignedPointSet& h);

struct MapsResult {
  std::vector<LagrangianCrossing> lagrangian_zeros;
  std::vector<MapNode> divdiff;
  ErrorZeroMap error_zeros;
  double fill_distance = 0.0;
  ZeroSetDistance zero_set_distance;
  double grid_spacing = 0.0;
};

/// Lagrangian zero sets, divided-difference surface and interpolation-error
/// zero set on the evaluation grid.
MapsResult cmd_maps(const ExperimentConfig& config);

struct GreedyReport {
  GreedyCriterion criterion = GreedyCriterion::DividedDifference;
  std::vector<GreedyStep> steps;
  /// Interpolation sup error over the evaluation grid after 0..k selections.
  std::vector<double> sup_error_after;
};

/// Greedy extension of the centers from the candidate grid T.
GreedyReport cmd_greedy(const ExperimentConfig& config, std::size_t count,
                        GreedyCriterion criterion);

struct ReproReport {
  ApproxResult approx;
  /// Top-|residual| selection of as many points as there are centers.
  Candidate extremal;
  std::optional<Candidate> multiplier;
  /// Thresholds at decreasing fractions of eta* on T.
  std::vector<Candidate> sweep;
  /// Index into sweep of the lowest-threshold certified candidate.
  std::optional<std::size_t> reduced_from;
  std::optional<ReduceReport> reduction;
};

/// Relative thresholds mu / eta* used by the sweep of cmd_repro.
const std::vector<double>& repro_threshold_fractions();

/// The full pipeline: approximation, extremal and threshold candidates,
/// support reduction of the largest certified set.
ReproReport cmd_repro(const ExperimentConfig& config);

}  // namespace hsetkit
