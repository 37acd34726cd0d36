#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "hsetkit/experiment.hpp"

namespace testing {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline hsetkit::Function peaks_fn() {
  return [](std::span<const double> p) { return hsetkit::peaks(p[0], p[1]); };
}

inline hsetkit::PointSet line(std::initializer_list<double> xs) {
  hsetkit::PointSet p(1);
  for (double x : xs) p.push_back(std::vector<double>{x});
  return p;
}

/// Coordinate equality, ignoring subset labels.
inline bool same_points(const hsetkit::PointSet& a, const hsetkit::PointSet& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t d = 0; d < a.dim(); ++d)
      if (a[i][d] != b[i][d]) return false;
  return true;
}

/// Uniform points in [-1,1]^dim, rejecting near-duplicates.
inline hsetkit::PointSet random_points(std::mt19937_64& gen, std::size_t n, std::size_t dim = 2,
                                       double min_sep = 1e-3) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  hsetkit::PointSet p(dim);
  while (p.size() < n) {
    hsetkit::Point q(dim);
    for (double& c : q) c = u(gen);
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      ok = hsetkit::distance(p[i], q) > min_sep;
    if (ok) p.push_back(q);
  }
  return p;
}

inline hsetkit::DenseMatrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c) {
  std::normal_distribution<double> n(0.0, 1.0);
  hsetkit::DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = n(gen);
  return m;
}

inline std::vector<double> random_vector(std::mt19937_64& gen, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(gen);
  return v;
}

}  // namespace testing

namespace testing {

struct NearCrossing {
  hsetkit::Point xi;
  std::size_t center = 0;
  /// Edge endpoints on either side of the zero of u_center.
  hsetkit::Point left, right;
};

/// Bisects a grid edge on which exactly one Lagrangian changes sign while
/// all others stay well away from zero. Returns nothing if no such edge exists.
inline std::optional<NearCrossing> find_near_crossing(const hsetkit::KernelSystem& sys,
                                                      std::size_t per_axis = 41) {
  using namespace hsetkit;
  const RegularGrid grid = RegularGrid::square(-1.0, 1.0, per_axis);
  const PointSet nodes = grid.points();
  for (const auto& [a, b] : grid.edges()) {
    if (power_function_sq(sys, nodes[a]) < 1e-6 || power_function_sq(sys, nodes[b]) < 1e-6)
      continue;
    const auto ua = lagrangians_at(sys, nodes[a]);
    const auto ub = lagrangians_at(sys, nodes[b]);
    std::optional<std::size_t> j;
    bool clean = true;
    for (std::size_t i = 0; i < ua.size() && clean; ++i) {
      if (ua[i] * ub[i] < 0.0) {
        if (j) clean = false;
        j = i;
      } else if (std::min(std::abs(ua[i]), std::abs(ub[i])) < 1e-3) {
        clean = false;
      }
    }
    if (!clean || !j) continue;
    Point lo = nodes.point(a), hi = nodes.point(b);
    const double s_lo = ua[*j];
    Point mid(2);
    for (int it = 0; it < 200; ++it) {
      for (std::size_t d = 0; d < 2; ++d) mid[d] = 0.5 * (lo[d] + hi[d]);
      const double um = lagrangians_at(sys, mid)[*j];
      if (um == 0.0) break;
      (um * s_lo > 0.0 ? lo : hi) = mid;
    }
    if (std::abs(lagrangians_at(sys, mid)[*j]) > 1e-12) continue;
    return NearCrossing{mid, *j, nodes.point(a), nodes.point(b)};
  }
  return std::nullopt;
}

}  // namespace testing
