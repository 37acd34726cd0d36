#include "hsetkit/divdiff.hpp"

#include <cmath>

#include "hsetkit/cheb.hpp"
#include "hsetkit/error.hpp"

namespace hsetkit {

namespace {

std::vector<double> values_on(const PointSet& pts, const Function& f) {
  std::vector<double> v(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) v[i] = f(pts[i]);
  return v;
}

void require_separated(const KernelSystem& sys, std::span<const double> xi) {
  if (!(power_function_sq(sys, xi) > kDegenerateTolerance))
    throw Error(Errc::PointTooClose, "xi lies on or too close to the center set");
}

}  // namespace

DividedDifference divided_difference(const KernelSystem& sys, const Function& f,
                                     std::span<const double> xi) {
  require_separated(sys, xi);
  DividedDifference dd;
  dd.xi.assign(xi.begin(), xi.end());
  dd.lagrangians = lagrangians_at(sys, xi);
  for (std::size_t i = 0; i < dd.lagrangians.size(); ++i) {
    dd.lebesgue += std::abs(dd.lagrangians[i]);
    if (std::abs(dd.lagrangians[i]) <= kLagrangianZeroTolerance) dd.degenerate_indices.push_back(i);
  }
  const double norm = 1.0 + dd.lebesgue;
  const auto f_centers = values_on(sys.centers(), f);
  const double s_xi = dot(dd.lagrangians, f_centers);

  dd.weight_at_xi = 1.0 / norm;
  dd.weights_at_centers.resize(dd.lagrangians.size());
  for (std::size_t i = 0; i < dd.lagrangians.size(); ++i)
    dd.weights_at_centers[i] = -dd.lagrangians[i] / norm;
  dd.value = (f(xi) - s_xi) / norm;
  dd.eta_star = std::abs(dd.value);
  return dd;
}

AugmentedProblem augmented_problem(const KernelSystem& sys, const Function& f,
                                   std::span<const double> xi) {
  AugmentedProblem out;
  out.points = PointSet(xi.size());
  for (std::size_t i = 0; i < sys.size(); ++i) out.points.push_back(sys.centers()[i]);
  out.points.push_back(xi);
  out.basis_values = kernel_matrix(sys.kernel(), out.points, sys.centers());
  out.f_values = values_on(out.points, f);
  return out;
}

EquioscillationReport equioscillation_check(const KernelSystem& sys, const Function& f,
                                            std::span<const double> xi) {
  const DividedDifference dd = divided_difference(sys, f, xi);
  const AugmentedProblem aug = augmented_problem(sys, f, xi);
  const ChebSolution sol = solve_minimax(aug.basis_values, aug.f_values);

  EquioscillationReport rep;
  rep.eta_closed_form = dd.eta_star;
  rep.eta_lp = sol.eta_star;
  rep.residuals = strict_residuals(aug.basis_values, aug.f_values, sol);
  rep.point_count = rep.residuals.size();
  rep.extremal.resize(rep.point_count);
  for (std::size_t k = 0; k < rep.point_count; ++k) {
    rep.extremal[k] = std::abs(std::abs(rep.residuals[k]) - sol.eta_star) <= kExtremalTolerance;
    if (rep.extremal[k]) ++rep.extremal_count;
  }
  rep.degenerate_indices = dd.degenerate_indices;
  rep.degeneration = rep.point_count - rep.extremal_count;
  return rep;
}

SignedPointSet hset_from_point(const KernelSystem& sys, std::span<const double> xi) {
  require_separated(sys, xi);
  const auto u = lagrangians_at(sys, xi);
  PointSet pts(xi.size());
  std::vector<int> signs;
  pts.push_back(xi);
  signs.push_back(1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) <= kLagrangianZeroTolerance) continue;
    pts.push_back(sys.centers()[i]);
    signs.push_back(-sign_of(u[i]));
  }
  return {std::move(pts), std::move(signs)};
}

std::vector<LagrangianCrossing> lagrangian_zero_map(const KernelSystem& sys,
                                                    const RegularGrid& grid) {
  const std::size_t n = sys.size();
  const PointSet nodes = grid.points();
  // u[j][k]: Lagrangian j at node k.
  std::vector<std::vector<double>> u(n, std::vector<double>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto vals = lagrangians_at(sys, nodes[k]);
    for (std::size_t j = 0; j < n; ++j) u[j][k] = vals[j];
  }
  std::vector<LagrangianCrossing> out;
  for (std::size_t j = 0; j < n; ++j) {
    const ZeroScan scan = scan_sign_changes(grid, u[j], kLagrangianZeroTolerance);
    for (const auto& c : scan.crossings) out.push_back({j, c.location});
    for (std::size_t k : scan.zero_nodes) out.push_back({j, nodes.point(k)});
  }
  return out;
}

std::vector<MapNode> divdiff_map(const KernelSystem& sys, const Function& f,
                                 const RegularGrid& grid) {
  std::vector<MapNode> out;
  out.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    MapNode node{grid.node(k), std::nullopt};
    if (power_function_sq(sys, node.location) > kDegenerateTolerance)
      node.value = divided_difference(sys, f, node.location).value;
    out.push_back(std::move(node));
  }
  return out;
}

ErrorZeroMap error_zero_map(const KernelSystem& sys, const Function& f, const RegularGrid& grid) {
  const PointSet nodes = grid.points();
  const Interpolant s = interpolate(sys, values_on(sys.centers(), f));
  const auto fvals = values_on(nodes, f);
  std::vector<double> err(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) err[k] = fvals[k] - s(nodes[k]);

  const ZeroScan scan = scan_sign_changes(grid, err, error_zero_tolerance(fvals));
  ErrorZeroMap out;
  for (const auto& c : scan.crossings) out.crossings.push_back(c.location);
  for (std::size_t k : scan.zero_nodes) out.zero_nodes.push_back(nodes.point(k));
  for (std::size_t i = 0; i < sys.size(); ++i) out.centers.push_back(sys.centers().point(i));
  out.identically_zero = scan.zero_nodes.size() == nodes.size();
  return out;
}

std::vector<GreedyStep> greedy_select(const KernelSystem& sys, const Function& f,
                                      const PointSet& candidates, std::size_t count,
                                      GreedyCriterion criterion) {
  std::vector<GreedyStep> steps;
  if (count == 0) return steps;
  if (!sys.centers().empty() && !candidates.empty() && candidates.dim() != sys.centers().dim())
    throw Error(Errc::DimensionMismatch, "candidate dimension");

  const auto f_candidates = values_on(candidates, f);
  std::vector<bool> used(candidates.size(), false);
  PointSet centers(candidates.dim());
  for (std::size_t i = 0; i < sys.size(); ++i) centers.push_back(sys.centers()[i]);
  std::vector<double> f_centers = values_on(centers, f);
  KernelSystem current = sys;

  for (std::size_t step = 0; step < count; ++step) {
    std::size_t best = candidates.size();
    double best_score = -1.0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      if (!(power_function_sq(current, candidates[c]) > kDegenerateTolerance)) continue;
      const auto u = lagrangians_at(current, candidates[c]);
      const double err = std::abs(f_candidates[c] - dot(u, f_centers));
      double score = err;
      if (criterion == GreedyCriterion::DividedDifference) {
        double l = 0.0;
        for (double v : u) l += std::abs(v);
        score = err / (1.0 + l);
      }
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    if (best == candidates.size())
      throw Error(Errc::ExhaustedCandidates,
                  "only " + std::to_string(step) + " usable candidates for " +
                      std::to_string(count) + " requested selections");
    used[best] = true;
    steps.push_back({best, candidates.point(best), best_score});
    centers.push_back(candidates[best]);
    f_centers.push_back(f_candidates[best]);
    current = build_system(sys.kernel(), centers);
  }
  return steps;
}

}  // namespace hsetkit
