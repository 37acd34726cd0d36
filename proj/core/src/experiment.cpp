#include "hsetkit/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hsetkit/error.hpp"

namespace hsetkit {

double peaks(double x, double y) noexcept {
  return 3.0 * (1.0 - x) * (1.0 - x) * std::exp(-x * x - (y + 1.0) * (y + 1.0)) -
         10.0 * (x / 5.0 - x * x * x - std::pow(y, 5)) * std::exp(-x * x - y * y) -
         (1.0 / 3.0) * std::exp(-(x + 1.0) * (x + 1.0) - y * y);
}

TabulatedFunction::TabulatedFunction(PointSet points, std::vector<double> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.size() != values_.size())
    throw Error(Errc::DimensionMismatch, "one tabulated value per point");
  if (points_.empty()) throw Error(Errc::EmptyInput, "empty target table");
}

double TabulatedFunction::operator()(std::span<const double> p) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (p.size() == points_.dim() && squared_distance(points_[i], p) <= 1e-18) return values_[i];
  throw Error(Errc::InvalidArgument, "target table has no value at the requested point");
}

void ExperimentConfig::validate() const {
  if (grid_resolution < 2 || eval_grid_resolution < 2)
    throw Error(Errc::InvalidArgument, "grid resolutions must be at least 2");
  if (domain.dim() != 2) throw Error(Errc::InvalidArgument, "experiments run on a 2-D box");
  if (!centers && n_centers == 0) throw Error(Errc::InvalidArgument, "need at least one center");
  if (centers && centers->dim() != 2) throw Error(Errc::DimensionMismatch, "centers must be 2-D");
  for (double t : thresholds)
    if (!(t >= 0.0)) throw Error(Errc::InvalidArgument, "thresholds must be nonnegative");
  if (multiplier_threshold && !(*multiplier_threshold >= 0.0))
    throw Error(Errc::InvalidArgument, "multiplier threshold must be nonnegative");
  if (target == TargetKind::Tabulated && !table)
    throw Error(Errc::InvalidArgument, "tabulated target needs a table");
}

PointSet sample_centers(std::size_t count, const Box& box, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  PointSet out(box.dim());
  Point p(box.dim());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t a = 0; a < box.dim(); ++a) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      p[a] = box.lower[a] + u * (box.upper[a] - box.lower[a]);
    }
    out.push_back(p);
  }
  return out;
}

Function make_target(const ExperimentConfig& config) {
  if (config.target == TargetKind::Tabulated) {
    const TabulatedFunction table = *config.table;
    return [table](std::span<const double> p) { return table(p); };
  }
  const double s = config.peaks_rescale ? 3.0 : 1.0;
  return [s](std::span<const double> p) { return peaks(s * p[0], s * p[1]); };
}

PointSet experiment_centers(const ExperimentConfig& config) {
  PointSet c = config.centers ? *config.centers
                              : sample_centers(config.n_centers, config.domain, config.seed);
  if (c.size() > 1 && c.min_pairwise_distance() <= 1e-12)
    throw Error(Errc::DegeneratePoints,
                "coincident centers; choose another --seed or center file");
  return c;
}

namespace {

std::vector<double> values_on(const PointSet& pts, const Function& f) {
  std::vector<double> v(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) v[i] = f(pts[i]);
  return v;
}

RegularGrid grid_over(const Box& box, std::size_t per_axis) { return {box, {per_axis, per_axis}}; }

}  // namespace

std::vector<double> approximant_values(const ApproxResult& approx, const Kernel& kernel,
                                       const PointSet& points) {
  return kernel_matrix(kernel, points, approx.centers).multiply(approx.solution.coefficients);
}

ApproxResult cmd_approx(const ExperimentConfig& config) {
  config.validate();
  const Function f = make_target(config);
  ApproxResult r{experiment_centers(config),
                 grid_over(config.domain, config.grid_resolution),
                 {},
                 grid_over(config.domain, config.eval_grid_resolution),
                 {},
                 {},
                 {},
                 0.0,
                 0.0};
  r.grid_points = r.grid.points();
  r.basis_values = kernel_matrix(config.kernel, r.grid_points, r.centers);
  r.f_values = values_on(r.grid_points, f);
  r.solution = solve_minimax(r.basis_values, r.f_values);
  r.eta_star_on_grid = r.solution.eta_star;

  const PointSet eval_points = r.eval_grid.points();
  const auto v = approximant_values(r, config.kernel, eval_points);
  double sup = r.eta_star_on_grid;
  for (std::size_t k = 0; k < eval_points.size(); ++k)
    sup = std::max(sup, std::abs(f(eval_points[k]) - v[k]));
  r.sup_error_on_eval_grid = sup;
  return r;
}

Candidate evaluate_candidate(const ApproxResult& approx, const Kernel& kernel,
                             std::vector<std::size_t> indices, std::string rule, double threshold) {
  if (indices.empty()) throw Error(Errc::EmptySelection, "no grid point selected by " + rule);
  Candidate c;
  c.rule = std::move(rule);
  c.threshold = threshold;
  std::vector<int> signs;
  std::vector<double> f_h, v_h;
  for (std::size_t k : indices) {
    const double res = approx.solution.residuals[k];
    signs.push_back(sign_of(res));
    f_h.push_back(approx.f_values[k]);
    v_h.push_back(approx.f_values[k] - res);
  }
  c.indices = std::move(indices);
  c.set = SignedPointSet(approx.grid_points.subset(c.indices), signs);
  c.certificate = test_hset(kernel_hset_matrix(kernel, approx.centers, c.set));
  c.mu = mu_bound(f_h, v_h, signs);
  c.sandwich = error_sandwich(c.mu, approx.sup_error_on_eval_grid, c.certificate);
  return c;
}

Candidate select_by_threshold(const ApproxResult& approx, const Kernel& kernel, double mu) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < approx.solution.residuals.size(); ++k)
    if (std::abs(approx.solution.residuals[k]) >= mu) idx.push_back(k);
  if (idx.empty())
    throw Error(Errc::EmptySelection, "threshold exceeds the largest residual");
  return evaluate_candidate(approx, kernel, std::move(idx), "threshold", mu);
}

Candidate select_top(const ApproxResult& approx, const Kernel& kernel, std::size_t count) {
  const auto& r = approx.solution.residuals;
  std::vector<std::size_t> order(r.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(r[a]) > std::abs(r[b]); });
  order.resize(std::min(count, order.size()));
  const double cut = order.empty() ? 0.0 : std::abs(r[order.back()]);
  std::sort(order.begin(), order.end());
  return evaluate_candidate(approx, kernel, std::move(order), "top", cut);
}

Candidate select_by_multiplier(const ApproxResult& approx, const Kernel& kernel, double threshold) {
  std::vector<std::size_t> idx;
  const auto& w = approx.solution.dual_weights;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (std::abs(w[k]) > threshold) idx.push_back(k);
  return evaluate_candidate(approx, kernel, std::move(idx), "multiplier", threshold);
}

std::vector<Candidate> cmd_hset_candidates(const ExperimentConfig& config,
                                           const ApproxResult& approx) {
  std::vector<Candidate> out;
  for (double mu : config.thresholds) out.push_back(select_by_threshold(approx, config.kernel, mu));
  if (config.multiplier_threshold)
    out.push_back(select_by_multiplier(approx, config.kernel, *config.multiplier_threshold));
  return out;
}

ReduceReport cmd_reduce(const ApproxResult& approx, const Kernel& kernel, const Candidate& cand) {
  if (!cand.certificate.is_hset) throw Error(Errc::NotAnHSet, "candidate is not certified");
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < cand.indices.size(); ++k)
    if (cand.certificate.weights[k] > kSupportTolerance) keep.push_back(cand.indices[k]);

  ReduceReport rep;
  rep.size_before = cand.indices.size();
  rep.mu_before = cand.mu;
  rep.reduced = evaluate_candidate(approx, kernel, std::move(keep), "reduced", cand.threshold);
  rep.size_after = rep.reduced.indices.size();
  rep.mu_after = rep.reduced.mu;
  rep.recertified = rep.reduced.certificate.is_hset;
  rep.max_residual = max_abs(approx.solution.residuals);
  return rep;
}

SignedSetReduction reduce_signed_set(const Kernel& kernel, const PointSet& centers,
                                     const SignedPointSet& h) {
  SignedSetReduction out;
  out.certificate = test_hset(kernel_hset_matrix(kernel, centers, h));
  out.reduced = reduce_support(h, out.certificate);
  out.recertificate = test_hset(kernel_hset_matrix(kernel, centers, out.reduced));
  return out;
}

MapsResult cmd_maps(const ExperimentConfig& config) {
  config.validate();
  const Function f = make_target(config);
  const KernelSystem sys = build_system(config.kernel, experiment_centers(config));
  const RegularGrid grid = grid_over(config.domain, config.eval_grid_resolution);

  MapsResult out;
  out.lagrangian_zeros = lagrangian_zero_map(sys, grid);
  out.divdiff = divdiff_map(sys, f, grid);
  out.error_zeros = error_zero_map(sys, f, grid);
  out.fill_distance = fill_distance(sys.centers(), grid.points());
  const Interpolant s = interpolate(sys, values_on(sys.centers(), f));
  out.zero_set_distance = zero_set_distance(sys, s, f, grid);
  out.grid_spacing = grid.max_spacing();
  return out;
}

GreedyReport cmd_greedy(const ExperimentConfig& config, std::size_t count,
                        GreedyCriterion criterion) {
  config.validate();
  const Function f = make_target(config);
  const KernelSystem sys = build_system(config.kernel, experiment_centers(config));
  const PointSet candidates = grid_over(config.domain, config.grid_resolution).points();
  const PointSet eval_points = grid_over(config.domain, config.eval_grid_resolution).points();
  const auto f_eval = values_on(eval_points, f);

  GreedyReport rep;
  rep.criterion = criterion;
  rep.steps = greedy_select(sys, f, candidates, count, criterion);

  PointSet centers(2);
  for (std::size_t i = 0; i < sys.size(); ++i) centers.push_back(sys.centers()[i]);
  auto sup_error = [&](const PointSet& c) {
    const KernelSystem s = build_system(config.kernel, c);
    const Interpolant in = interpolate(s, values_on(c, f));
    double e = 0.0;
    for (std::size_t k = 0; k < eval_points.size(); ++k)
      e = std::max(e, std::abs(f_eval[k] - in(eval_points[k])));
    return e;
  };
  rep.sup_error_after.push_back(sup_error(centers));
  for (const auto& step : rep.steps) {
    centers.push_back(step.point);
    rep.sup_error_after.push_back(sup_error(centers));
  }
  return rep;
}

const std::vector<double>& repro_threshold_fractions() {
  static const std::vector<double> fractions{0.99, 0.9, 0.75, 0.5, 0.25, 0.1};
  return fractions;
}

ReproReport cmd_repro(const ExperimentConfig& config) {
  ReproReport rep{cmd_approx(config), {}, std::nullopt, {}, std::nullopt, std::nullopt};
  const ApproxResult& approx = rep.approx;
  const double eta = approx.eta_star_on_grid;

  rep.extremal = select_top(approx, config.kernel, approx.centers.size());
  if (config.multiplier_threshold)
    rep.multiplier = select_by_multiplier(approx, config.kernel, *config.multiplier_threshold);

  std::vector<double> thresholds;
  for (double frac : repro_threshold_fractions()) thresholds.push_back(frac * eta);
  thresholds.insert(thresholds.end(), config.thresholds.begin(), config.thresholds.end());
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  for (double mu : thresholds) {
    if (mu > eta) continue;
    rep.sweep.push_back(select_by_threshold(approx, config.kernel, mu));
  }
  for (std::size_t i = rep.sweep.size(); i-- > 0;) {
    if (rep.sweep[i].certificate.is_hset) {
      rep.reduced_from = i;
      rep.reduction = cmd_reduce(approx, config.kernel, rep.sweep[i]);
      break;
    }
  }
  return rep;
}

}  // namespace hsetkit
