#include "acx/geometry.hpp"

#include <algorithm>
#include <string>

#include "acx/errors.hpp"

namespace acx {

FinitePointSet::FinitePointSet(std::size_t dimension, std::vector<RationalVector> points)
    : dimension_(dimension) {
  for (auto& p : points) insert(std::move(p));
}

FinitePointSet::FinitePointSet(std::initializer_list<RationalVector> points) {
  if (points.size() > 0) dimension_ = points.begin()->size();
  for (const auto& p : points) insert(p);
}

bool FinitePointSet::insert(RationalVector p) {
  if (points_.empty() && dimension_ == 0) dimension_ = p.size();
  if (p.size() != dimension_) {
    throw DimensionMismatch("point " + to_string(p) + " in a set of dimension " +
                            std::to_string(dimension_));
  }
  if (contains(p)) return false;
  points_.push_back(std::move(p));
  return true;
}

bool FinitePointSet::contains(const RationalVector& p) const {
  return index_of(p) != points_.size();
}

std::size_t FinitePointSet::index_of(const RationalVector& p) const {
  const auto it = std::find(points_.begin(), points_.end(), p);
  return static_cast<std::size_t>(it - points_.begin());
}

bool FinitePointSet::same_points(const FinitePointSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(points_.begin(), points_.end(),
                     [&](const RationalVector& p) { return other.contains(p); });
}

FinitePointSet FinitePointSet::sorted() const {
  std::vector<RationalVector> pts = points_;
  std::sort(pts.begin(), pts.end(), lex_less);
  return FinitePointSet(dimension_, std::move(pts));
}

void validate(const Polyhedron& poly) {
  if (poly.vertices.empty()) {
    throw PreconditionViolation("polyhedron needs at least one vertex");
  }
  for (const auto& r : poly.rays) {
    if (r.size() != poly.dimension()) {
      throw DimensionMismatch("ray " + to_string(r) + " in a polyhedron of dimension " +
                              std::to_string(poly.dimension()));
    }
  }
}

}  // namespace acx
