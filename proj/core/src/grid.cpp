#include "hsetkit/grid.hpp"

#include <cmath>

#include "hsetkit/error.hpp"

namespace hsetkit {

Box Box::cube(std::size_t dim, double lo, double hi) {
  return {std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
}

RegularGrid::RegularGrid(Box box, std::vector<std::size_t> counts)
    : box_(std::move(box)), counts_(std::move(counts)) {
  if (box_.lower.size() != box_.upper.size() || counts_.size() != box_.dim())
    throw Error(Errc::DimensionMismatch, "grid box and counts");
  if (dim() < 1 || dim() > 2) throw Error(Errc::InvalidArgument, "grids are 1- or 2-dimensional");
  for (std::size_t a = 0; a < dim(); ++a) {
    if (counts_[a] < 2) throw Error(Errc::InvalidArgument, "grid resolution must be at least 2");
    if (!(box_.upper[a] > box_.lower[a])) throw Error(Errc::InvalidArgument, "empty grid box");
  }
}

RegularGrid RegularGrid::square(double lo, double hi, std::size_t per_axis) {
  return {Box::cube(2, lo, hi), {per_axis, per_axis}};
}

std::size_t RegularGrid::size() const noexcept {
  std::size_t n = 1;
  for (std::size_t c : counts_) n *= c;
  return n;
}

double RegularGrid::spacing(std::size_t axis) const {
  return (box_.upper[axis] - box_.lower[axis]) / static_cast<double>(counts_[axis] - 1);
}

double RegularGrid::max_spacing() const {
  double m = 0.0;
  for (std::size_t a = 0; a < dim(); ++a) m = std::max(m, spacing(a));
  return m;
}

Point RegularGrid::node(std::size_t index) const {
  Point p(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    const std::size_t i = index % counts_[a];
    index /= counts_[a];
    // Pin the last node to the upper bound exactly.
    p[a] = i + 1 == counts_[a] ? box_.upper[a]
                               : box_.lower[a] + static_cast<double>(i) * spacing(a);
  }
  return p;
}

PointSet RegularGrid::points() const {
  PointSet out(dim());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(node(k));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> RegularGrid::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t nx = counts_[0];
  const std::size_t ny = dim() == 2 ? counts_[1] : 1;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t k = i + j * nx;
      if (i + 1 < nx) out.emplace_back(k, k + 1);
      if (j + 1 < ny) out.emplace_back(k, k + nx);
    }
  return out;
}

ZeroScan scan_sign_changes(const RegularGrid& grid, std::span<const double> values,
                           double zero_tol) {
  if (values.size() != grid.size()) throw Error(Errc::DimensionMismatch, "one value per node");
  ZeroScan scan;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (std::abs(values[k]) <= zero_tol) scan.zero_nodes.push_back(k);

  for (const auto& [a, b] : grid.edges()) {
    const double va = values[a];
    const double vb = values[b];
    if (std::abs(va) <= zero_tol || std::abs(vb) <= zero_tol) continue;
    if ((va < 0.0) == (vb < 0.0)) continue;
    const double t = va / (va - vb);
    const Point pa = grid.node(a);
    const Point pb = grid.node(b);
    Point loc(pa.size());
    for (std::size_t d = 0; d < loc.size(); ++d) loc[d] = pa[d] + t * (pb[d] - pa[d]);
    scan.crossings.push_back({std::move(loc), a, b});
  }
  return scan;
}

}  // namespace hsetkit
