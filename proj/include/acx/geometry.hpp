#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "acx/rational.hpp"

namespace acx {

/// A finite subset of Q^n. Points keep their first-insertion order and
/// duplicates are dropped, so two sets built from the same list compare
/// equal element by element.
class FinitePointSet {
 public:
  FinitePointSet() = default;
  explicit FinitePointSet(std::size_t dimension) : dimension_(dimension) {}
  FinitePointSet(std::size_t dimension, std::vector<RationalVector> points);
  FinitePointSet(std::initializer_list<RationalVector> points);

  /// Returns false when the point was already present.
  bool insert(RationalVector p);

  bool contains(const RationalVector& p) const;
  std::size_t index_of(const RationalVector& p) const;  // size() when absent

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const RationalVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<RationalVector>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Set equality (order-insensitive).
  bool same_points(const FinitePointSet& other) const;

  /// Copy sorted lexicographically; used for stable output listings.
  FinitePointSet sorted() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<RationalVector> points_;
};

/// co(vertices) + cone(rays). The vertex list need not be irredundant.
struct Polyhedron {
  FinitePointSet vertices;
  std::vector<RationalVector> rays;

  std::size_t dimension() const { return vertices.dimension(); }
  bool bounded() const { return rays.empty(); }
};

/// Throws PreconditionViolation for an empty vertex list and
/// DimensionMismatch when a ray disagrees with the vertices.
void validate(const Polyhedron& poly);

}  // namespace acx
