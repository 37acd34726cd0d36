#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hsetkit {

using Point = std::vector<double>;

/// Ordered list of points of a common dimension, stored contiguously.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}

  static PointSet from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static PointSet from_points(std::span<const Point> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return size() == 0; }

  std::span<const double> operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  Point point(std::size_t i) const;

  void push_back(std::span<const double> p);
  void push_back(std::span<const double> p, std::size_t label);

  /// Original indices carried along by subset operations, when recorded.
  const std::optional<std::vector<std::size_t>>& labels() const noexcept { return labels_; }

  PointSet subset(std::span<const std::size_t> indices) const;
  double min_pairwise_distance() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::optional<std::vector<std::size_t>> labels_;
};

/// Candidate H-set: points with a sign +1 or -1 attached to each.
class SignedPointSet {
 public:
  SignedPointSet() = default;
  SignedPointSet(PointSet points, std::vector<int> signs);

  const PointSet& points() const noexcept { return points_; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  std::size_t size() const noexcept { return signs_.size(); }

  SignedPointSet subset(std::span<const std::size_t> indices) const;
  SignedPointSet flipped() const;

 private:
  PointSet points_;
  std::vector<int> signs_;
};

double distance(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

/// +1 for v >= 0, -1 otherwise.
inline int sign_of(double v) noexcept { return v < 0.0 ? -1 : 1; }

}  // namespace hsetkit
