#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hsetkit/points.hpp"

namespace hsetkit {

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  static Box cube(std::size_t dim, double lo, double hi);
  std::size_t dim() const noexcept { return lower.size(); }
};

/// Tensor-product grid of equispaced nodes over a box, in 1 or 2 dimensions.
/// Node (i, j) has flat index i + j * counts[0].
class RegularGrid {
 public:
  RegularGrid(Box box, std::vector<std::size_t> counts);
  static RegularGrid square(double lo, double hi, std::size_t per_axis);

  std::size_t dim() const noexcept { return box_.dim(); }
  std::size_t size() const noexcept;
  const Box& box() const noexcept { return box_; }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  Point node(std::size_t index) const;
  PointSet points() const;
  double spacing(std::size_t axis) const;
  /// Euclidean length of the longest grid edge.
  double max_spacing() const;
  /// Axis-aligned neighbour pairs (a, b) with a < b.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  Box box_;
  std::vector<std::size_t> counts_;
};

struct ZeroCrossing {
  Point location;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct ZeroScan {
  std::vector<ZeroCrossing> crossings;
  /// Nodes whose value is within the zero tolerance.
  std::vector<std::size_t> zero_nodes;
};

/// Locates sign changes of nodal values along grid edges by linear
/// interpolation. Nodes with |value| <= zero_tol are reported as zero nodes
/// and do not form crossings.
ZeroScan scan_sign_changes(const RegularGrid& grid, std::span<const double> values,
                           double zero_tol);

}  // namespace hsetkit
