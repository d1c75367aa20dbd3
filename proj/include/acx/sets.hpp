#pragma once

#include <cstddef>
#include <vector>

#include "acx/cone.hpp"
#include "acx/geometry.hpp"

namespace acx {

/// A finite R_C-chain: every two distinct points are comparable under the
/// cone. For a finite set this is exactly C-antichain-convexity, since the
/// defining implication only ever fires on incomparable pairs.
class ChainSet {
 public:
  /// Throws PreconditionViolation naming the first incomparable pair.
  ChainSet(FinitePointSet base, Cone cone);

  const FinitePointSet& base() const { return base_; }
  const Cone& cone() const { return cone_; }
  std::size_t dimension() const { return base_.dimension(); }

  /// The same points viewed as a chain for -C.
  ChainSet negated_cone() const;

 private:
  FinitePointSet base_;
  Cone cone_;
};

/// Minkowski sum of chains that share one cone and one dimension.
class DecomposableSet {
 public:
  explicit DecomposableSet(std::vector<ChainSet> summands);

  const std::vector<ChainSet>& summands() const { return summands_; }
  const Cone& cone() const { return summands_.front().cone(); }
  std::size_t dimension() const { return summands_.front().dimension(); }

  DecomposableSet negated_cone() const;

 private:
  std::vector<ChainSet> summands_;
};

bool is_chain(const FinitePointSet& s, const Cone& cone);
bool is_antichain(const FinitePointSet& s, const Cone& cone);

/// Discrete surrogate for antichain-convexity on a lattice: for every
/// incomparable pair and every lambda = k/denominator, a combination that
/// lands on the lattice (step * Z^n) must belong to S. The first overload
/// uses step = 1 / (common denominator of all coordinates of S).
/// Throws std::invalid_argument when denominator is 0.
bool is_grid_antichain_convex(const FinitePointSet& s, const Cone& cone, unsigned denominator);
bool is_grid_antichain_convex(const FinitePointSet& s, const Cone& cone, unsigned denominator,
                              const Rational& step);

FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b);
FinitePointSet materialize(const DecomposableSet& d);

/// co(S) with the vertex list reduced to extreme points (drop-one LPs).
Polyhedron convex_hull(const FinitePointSet& s);

/// S + K with K = k_closure(C): extreme points of S plus the cone's generators
/// as rays.
Polyhedron upward_hull(const FinitePointSet& s, const Cone& cone);

/// Every generator of C lies in the recession cone of P.
bool is_upward(const Polyhedron& poly, const Cone& cone);

/// Containment and equality of point sets (not representations).
bool polyhedron_contains(const Polyhedron& outer, const Polyhedron& inner);
bool same_polyhedron(const Polyhedron& a, const Polyhedron& b);

}  // namespace acx
