#include "hsetkit/points.hpp"

#include <cmath>
#include <limits>

#include "hsetkit/error.hpp"

namespace hsetkit {

PointSet PointSet::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  if (rows.size() == 0) return {};
  PointSet out(rows.begin()->size());
  for (const auto& r : rows) out.push_back(std::span<const double>(r.begin(), r.size()));
  return out;
}

PointSet PointSet::from_points(std::span<const Point> points) {
  if (points.empty()) return {};
  PointSet out(points.front().size());
  for (const auto& p : points) out.push_back(p);
  return out;
}

Point PointSet::point(std::size_t i) const {
  const auto p = (*this)[i];
  return {p.begin(), p.end()};
}

void PointSet::push_back(std::span<const double> p) {
  if (dim_ == 0 && coords_.empty()) dim_ = p.size();
  if (p.size() != dim_ || dim_ == 0) throw Error(Errc::DimensionMismatch, "point dimension");
  if (labels_) throw Error(Errc::InvalidArgument, "labelled set needs a label for every point");
  coords_.insert(coords_.end(), p.begin(), p.end());
}

void PointSet::push_back(std::span<const double> p, std::size_t label) {
  if (dim_ == 0 && coords_.empty()) dim_ = p.size();
  if (p.size() != dim_ || dim_ == 0) throw Error(Errc::DimensionMismatch, "point dimension");
  if (!labels_) {
    if (!coords_.empty()) throw Error(Errc::InvalidArgument, "unlabelled set cannot take labels");
    labels_.emplace();
  }
  coords_.insert(coords_.end(), p.begin(), p.end());
  labels_->push_back(label);
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out(dim_);
  for (std::size_t i : indices) {
    if (i >= size()) throw Error(Errc::DimensionMismatch, "subset index out of range");
    out.push_back((*this)[i], labels_ ? (*labels_)[i] : i);
  }
  return out;
}

double PointSet::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      best = std::min(best, squared_distance((*this)[i], (*this)[j]));
  return std::sqrt(best);
}

SignedPointSet::SignedPointSet(PointSet points, std::vector<int> signs)
    : points_(std::move(points)), signs_(std::move(signs)) {
  if (signs_.size() != points_.size())
    throw Error(Errc::DimensionMismatch, "one sign per point required");
  for (int s : signs_)
    if (s != 1 && s != -1) throw Error(Errc::InvalidArgument, "signs must be +1 or -1");
}

SignedPointSet SignedPointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<int> s;
  s.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw Error(Errc::DimensionMismatch, "subset index out of range");
    s.push_back(signs_[i]);
  }
  return {points_.subset(indices), std::move(s)};
}

SignedPointSet SignedPointSet::flipped() const {
  std::vector<int> s = signs_;
  for (int& v : s) v = -v;
  return {points_, std::move(s)};
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "point dimensions differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace hsetkit
