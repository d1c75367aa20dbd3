#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "acx/geometry.hpp"

namespace acx {

/// A relation on a finite ground set, stored as a boolean matrix:
/// related(t, s) holds iff t is in R(s), i.e. (t, s) is in R.
class FiniteRelation {
 public:
  FiniteRelation(FinitePointSet ground, std::vector<std::vector<bool>> related);

  /// Builds the relation by evaluating `pred(t, s)` on every ordered pair.
  static FiniteRelation from_predicate(
      FinitePointSet ground,
      const std::function<bool(const RationalVector& t, const RationalVector& s)>& pred);

  const FinitePointSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  bool related(std::size_t t, std::size_t s) const { return related_[t][s]; }

  /// R(s) as a point set.
  FinitePointSet upper_set(std::size_t s) const;

  bool is_total() const;
  bool is_transitive() const;

  /// Every pair of `this` is a pair of `other` (same ground ordering).
  bool subset_of(const FiniteRelation& other) const;

 private:
  FinitePointSet ground_;
  std::vector<std::vector<bool>> related_;
};

/// A relation verified total and transitive at construction.
class TotalPreorder {
 public:
  /// Throws PreconditionViolation when the relation is not a total preorder.
  explicit TotalPreorder(FiniteRelation relation);

  /// R(x) = { y : u(y) >= u(x) }.
  static TotalPreorder from_utility(FinitePointSet ground,
                                    const std::function<Rational(const RationalVector&)>& u);

  const FiniteRelation& relation() const { return relation_; }
  const FinitePointSet& ground() const { return relation_.ground(); }

 private:
  FiniteRelation relation_;
};

/// m in S is kept iff s in R(m) implies m in R(s) for every s in S.
FinitePointSet maximals_by_definition(const FiniteRelation& r, const FinitePointSet& s);

/// m in S is kept iff m in R(s) for every s in S. Only meaningful for total R.
FinitePointSet maximals_by_base(const FiniteRelation& r, const FinitePointSet& s);

/// Dispatches on totality: the for-all characterization when R is total,
/// the raw definition otherwise. Throws PreconditionViolation when S has a
/// point outside the ground set.
FinitePointSet maximals(const FiniteRelation& r, const FinitePointSet& s);
FinitePointSet maximals(const TotalPreorder& r, const FinitePointSet& s);

/// Maximals of the convexification R^co(x) = co(R(x)). R^co contains R and
/// is therefore total, so m is kept iff m in co(R(s)) for every s in S.
FinitePointSet convexified_maximals(const TotalPreorder& r, const FinitePointSet& s);

}  // namespace acx
